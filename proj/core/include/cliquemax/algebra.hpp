#pragma once

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace cliquemax {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Arithmetic between two irrational numbers from different quadratic fields.
class RadicandMismatch : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// C(n, k) = n (n-1) ... (n-k+1) / k!. Zero when 0 <= n < k. Throws
/// std::invalid_argument for k < 0.
BigInt binomial(long long n, long long k);

/// Parses "p", "-p" or "p/q" into a reduced rational.
BigRational parse_rational(std::string_view text);
std::string to_string(const BigRational& r);

/// Exact element a + b*sqrt(d) of a real quadratic field.
///
/// Normal form: d >= 0 with small square factors moved into b; a perfect
/// square d is folded into a; b == 0 iff d == 0. Arithmetic requires both
/// operands to share d (or one of them to be rational). Comparison works
/// across fields.
class QuadraticNumber {
 public:
  QuadraticNumber() = default;
  QuadraticNumber(BigRational rational);  // NOLINT(google-explicit-constructor)
  QuadraticNumber(long long value) : QuadraticNumber(BigRational(value)) {}  // NOLINT
  QuadraticNumber(BigRational a, BigRational b, BigInt d);

  const BigRational& rational_part() const { return a_; }
  const BigRational& surd_coefficient() const { return b_; }
  const BigInt& radicand() const { return d_; }
  bool is_rational() const { return b_ == 0; }

  /// -1, 0 or +1, decided exactly.
  int sign() const;

  /// Display only; never used for decisions.
  double to_double() const;
  std::string to_string() const;

  QuadraticNumber operator-() const;
  QuadraticNumber& operator+=(const QuadraticNumber& o);
  QuadraticNumber& operator-=(const QuadraticNumber& o);
  QuadraticNumber& operator*=(const QuadraticNumber& o);
  QuadraticNumber& operator/=(const BigRational& r);

  friend QuadraticNumber operator+(QuadraticNumber x, const QuadraticNumber& y) { return x += y; }
  friend QuadraticNumber operator-(QuadraticNumber x, const QuadraticNumber& y) { return x -= y; }
  friend QuadraticNumber operator*(QuadraticNumber x, const QuadraticNumber& y) { return x *= y; }
  friend QuadraticNumber operator/(QuadraticNumber x, const BigRational& r) { return x /= r; }

  /// Structural equality of normal forms.
  friend bool operator==(const QuadraticNumber&, const QuadraticNumber&) = default;

 private:
  BigInt common_radicand(const QuadraticNumber& o) const;
  void normalize();

  BigRational a_;
  BigRational b_;
  BigInt d_;
};

/// Exact comparison of values, including numbers from different fields.
std::strong_ordering compare(const QuadraticNumber& p, const QuadraticNumber& q);

/// A rational plus a linear combination of square roots with arbitrary
/// radicands: r + sum c_i sqrt(d_i). Used where values from several
/// quadratic fields are added, e.g. second differences of f_t.
class SurdSum {
 public:
  SurdSum() = default;
  SurdSum(const QuadraticNumber& q) { add(q); }  // NOLINT(google-explicit-constructor)

  void add(const QuadraticNumber& q, const BigRational& weight = 1);
  SurdSum& operator+=(const SurdSum& o);
  SurdSum& operator-=(const SurdSum& o);
  friend SurdSum operator-(SurdSum x, const SurdSum& y) { return x -= y; }
  friend SurdSum operator+(SurdSum x, const SurdSum& y) { return x += y; }

  /// Exact sign. Proportional radicands are merged first (sqrt(d_j) is a
  /// rational multiple of sqrt(d_i) iff d_i d_j is a square), after which
  /// the remaining surds are linearly independent over Q, so the value is
  /// zero iff every coefficient is; otherwise rational enclosures of the
  /// square roots are tightened until the sign is determined.
  int sign() const;
  bool is_zero() const { return sign() == 0; }
  /// Rational value if the sum has no surviving surds.
  std::optional<BigRational> as_rational() const;
  double to_double() const;

 private:
  void add_surd(const BigInt& radicand, const BigRational& coefficient);

  BigRational rational_;
  std::vector<std::pair<BigInt, BigRational>> terms_;  // (radicand, coefficient)
};

/// (1/k!) x (x-1) ... (x-k+1), exact. k >= 0.
QuadraticNumber gen_binomial(const QuadraticNumber& x, long long k);

/// Positive root of C(u, 2) = x, i.e. (1 + sqrt(1 + 8x)) / 2. Throws
/// std::invalid_argument for negative x.
QuadraticNumber u_of(const BigRational& x);

}  // namespace cliquemax
