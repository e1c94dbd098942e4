#include "cliquemax/algebra.hpp"

#include <cmath>
#include <sstream>

namespace cliquemax {

namespace mp = boost::multiprecision;

namespace {

// Square factors p^2 with p below this bound are pulled out of radicands.
constexpr unsigned kSquareFactorBound = 200;

bool is_square(const BigInt& d, BigInt* root = nullptr) {
  if (d < 0) return false;
  BigInt s = mp::sqrt(d);
  if (s * s != d) return false;
  if (root) *root = s;
  return true;
}

int sign_of(const BigRational& r) { return r.sign(); }

// Rational bounds lo <= sqrt(d) <= hi with hi - lo = 2^-bits.
void sqrt_enclosure(const BigInt& d, unsigned bits, BigRational& lo, BigRational& hi) {
  const BigInt scale = BigInt(1) << bits;
  const BigInt scaled = d * scale * scale;
  const BigInt s = mp::sqrt(scaled);
  lo = BigRational(s, scale);
  hi = BigRational(s + 1, scale);
}

}  // namespace

BigInt binomial(long long n, long long k) {
  if (k < 0) throw std::invalid_argument("binomial: negative k");
  BigInt num = 1;
  BigInt den = 1;
  for (long long i = 0; i < k; ++i) {
    num *= BigInt(n - i);
    den *= BigInt(i + 1);
  }
  return num / den;
}

BigRational parse_rational(std::string_view text) {
  auto parse_int = [](std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty integer in rational");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw std::invalid_argument("malformed integer");
    for (std::size_t j = i; j < s.size(); ++j) {
      if (s[j] < '0' || s[j] > '9') throw std::invalid_argument("malformed integer: " + std::string(s));
    }
    return BigInt(std::string(s));
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return BigRational(parse_int(text));
  const BigInt den = parse_int(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator");
  return BigRational(parse_int(text.substr(0, slash)), den);
}

std::string to_string(const BigRational& r) {
  std::ostringstream out;
  out << mp::numerator(r);
  if (mp::denominator(r) != 1) out << '/' << mp::denominator(r);
  return out.str();
}

QuadraticNumber::QuadraticNumber(BigRational rational) : a_(std::move(rational)) {}

QuadraticNumber::QuadraticNumber(BigRational a, BigRational b, BigInt d)
    : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
  if (d_ < 0) throw std::domain_error("negative radicand");
  if (b_ != 0 && d_ != 0) {
    for (unsigned p = 2; p <= kSquareFactorBound; ++p) {
      const unsigned sq = p * p;
      if (sq > d_) break;
      while (d_ % sq == 0) {
        d_ /= sq;
        b_ *= p;
      }
    }
    BigInt root;
    if (is_square(d_, &root)) {
      a_ += b_ * root;
      b_ = 0;
    }
  }
  normalize();
}

void QuadraticNumber::normalize() {
  if (b_ == 0 || d_ == 0) {
    b_ = 0;
    d_ = 0;
  }
}

BigInt QuadraticNumber::common_radicand(const QuadraticNumber& o) const {
  if (is_rational()) return o.d_;
  if (o.is_rational() || d_ == o.d_) return d_;
  throw RadicandMismatch("arithmetic across different quadratic fields");
}

int QuadraticNumber::sign() const {
  const int sa = sign_of(a_);
  const int sb = sign_of(b_);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  const BigRational lhs = a_ * a_;
  const BigRational rhs = b_ * b_ * BigRational(d_);
  if (lhs == rhs) return 0;
  return lhs > rhs ? sa : sb;
}

double QuadraticNumber::to_double() const {
  return a_.convert_to<double>() + b_.convert_to<double>() * std::sqrt(d_.convert_to<double>());
}

std::string QuadraticNumber::to_string() const {
  if (is_rational()) return cliquemax::to_string(a_);
  std::ostringstream out;
  out << cliquemax::to_string(a_) << " + (" << cliquemax::to_string(b_) << ")*sqrt(" << d_ << ')';
  return out.str();
}

QuadraticNumber QuadraticNumber::operator-() const {
  QuadraticNumber r = *this;
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

QuadraticNumber& QuadraticNumber::operator+=(const QuadraticNumber& o) {
  d_ = common_radicand(o);
  a_ += o.a_;
  b_ += o.b_;
  normalize();
  return *this;
}

QuadraticNumber& QuadraticNumber::operator-=(const QuadraticNumber& o) { return *this += -o; }

QuadraticNumber& QuadraticNumber::operator*=(const QuadraticNumber& o) {
  const BigInt d = common_radicand(o);
  BigRational a = a_ * o.a_ + b_ * o.b_ * BigRational(d);
  BigRational b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  d_ = d;
  normalize();
  return *this;
}

QuadraticNumber& QuadraticNumber::operator/=(const BigRational& r) {
  if (r == 0) throw std::domain_error("division by zero");
  a_ /= r;
  b_ /= r;
  return *this;
}

std::strong_ordering compare(const QuadraticNumber& p, const QuadraticNumber& q) {
  SurdSum diff(p);
  diff.add(q, -1);
  const int s = diff.sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

void SurdSum::add_surd(const BigInt& radicand, const BigRational& coefficient) {
  if (coefficient == 0) return;
  for (auto& [d, c] : terms_) {
    if (d == radicand) {
      c += coefficient;
      return;
    }
    BigInt root;
    if (is_square(d * radicand, &root)) {
      // sqrt(radicand) = root / d * sqrt(d)
      c += coefficient * BigRational(root, d);
      return;
    }
  }
  terms_.emplace_back(radicand, coefficient);
}

void SurdSum::add(const QuadraticNumber& q, const BigRational& weight) {
  rational_ += weight * q.rational_part();
  if (!q.is_rational()) add_surd(q.radicand(), weight * q.surd_coefficient());
}

SurdSum& SurdSum::operator+=(const SurdSum& o) {
  rational_ += o.rational_;
  for (const auto& [d, c] : o.terms_) add_surd(d, c);
  return *this;
}

SurdSum& SurdSum::operator-=(const SurdSum& o) {
  rational_ -= o.rational_;
  for (const auto& [d, c] : o.terms_) add_surd(d, -c);
  return *this;
}

std::optional<BigRational> SurdSum::as_rational() const {
  for (const auto& term : terms_) {
    if (term.second != 0) return std::nullopt;
  }
  return rational_;
}

int SurdSum::sign() const {
  std::vector<const std::pair<BigInt, BigRational>*> live;
  for (const auto& term : terms_) {
    if (term.second != 0) live.push_back(&term);
  }
  if (live.empty()) return sign_of(rational_);
  if (live.size() == 1) return QuadraticNumber(rational_, live[0]->second, live[0]->first).sign();
  // Nonzero by linear independence, so tightening terminates.
  BigRational lo_root;
  BigRational hi_root;
  for (unsigned bits = 32;; bits *= 2) {
    BigRational lo = rational_;
    BigRational hi = rational_;
    for (const auto* term : live) {
      sqrt_enclosure(term->first, bits, lo_root, hi_root);
      const BigRational& c = term->second;
      if (c > 0) {
        lo += c * lo_root;
        hi += c * hi_root;
      } else {
        lo += c * hi_root;
        hi += c * lo_root;
      }
    }
    if (lo > 0) return 1;
    if (hi < 0) return -1;
  }
}

double SurdSum::to_double() const {
  double value = rational_.convert_to<double>();
  for (const auto& [d, c] : terms_) value += c.convert_to<double>() * std::sqrt(d.convert_to<double>());
  return value;
}

QuadraticNumber gen_binomial(const QuadraticNumber& x, long long k) {
  if (k < 0) throw std::invalid_argument("gen_binomial: negative k");
  QuadraticNumber product(1);
  BigInt factorial = 1;
  for (long long i = 0; i < k; ++i) {
    product *= x - QuadraticNumber(i);
    factorial *= BigInt(i + 1);
  }
  return product / BigRational(factorial);
}

QuadraticNumber u_of(const BigRational& x) {
  if (x < 0) throw std::invalid_argument("u_of: negative argument");
  // 1 + 8x = p/q, so sqrt(1 + 8x) = sqrt(p q) / q.
  const BigRational disc = 1 + 8 * x;
  const BigInt p = mp::numerator(disc);
  const BigInt q = mp::denominator(disc);
  return QuadraticNumber(BigRational(1, 2), BigRational(BigInt(1), 2 * q), p * q);
}

}  // namespace cliquemax
