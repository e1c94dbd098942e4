#include "cliquemax/smoothing.hpp"

#include <algorithm>

#include "cliquemax/kk_bounds.hpp"

namespace cliquemax {

namespace {

SurdSum objective(const std::vector<QuadraticNumber>& values) {
  SurdSum sum;
  for (const auto& v : values) sum.add(v);
  return sum;
}

bool interior(const BigRational& x, const SmoothingState& s) { return s.lo < x && x < s.hi; }

SmoothingState from_parameters_checked(int max_deg, int b, int t, std::size_t size) {
  if (max_deg < 1 || b < 1 || b > max_deg + 1) throw std::invalid_argument("smoothing needs 1 <= b <= delta+1");
  if (t < 3) throw std::invalid_argument("smoothing needs t >= 3");
  if (size != static_cast<std::size_t>(max_deg + 1 + b)) {
    throw std::invalid_argument("smoothing needs delta+1+b entries");
  }
  SmoothingState s;
  s.lo = BigRational(binomial(b - 1, 2));
  s.hi = BigRational(binomial(max_deg, 2));
  s.target_sum = BigRational(3 * binomial(max_deg + 1, 3) + 3 * binomial(b, 3));
  s.objective_t = t;
  return s;
}

}  // namespace

SmoothingState SmoothingState::from_parameters(int max_deg, int b, int t, std::vector<BigRational> xs) {
  SmoothingState s = from_parameters_checked(max_deg, b, t, xs.size());
  s.xs = std::move(xs);
  return s;
}

SmoothingState random_state(int max_deg, int b, int t, std::mt19937_64& rng) {
  const int n = max_deg + 1 + b;
  SmoothingState s = from_parameters_checked(max_deg, b, t, n);
  const BigRational width = s.hi - s.lo;
  std::uniform_int_distribution<int> step(1, 999);
  BigRational sum = 0;
  for (int i = 0; i < n; ++i) {
    s.xs.push_back(s.lo + width * BigRational(step(rng), 1000));
    sum += s.xs.back();
  }
  const BigRational floor_sum = BigRational(n) * s.lo;
  if (width == 0) {
    std::fill(s.xs.begin(), s.xs.end(), s.lo);
  } else if (sum > s.target_sum) {
    // Shrink every offset from lo by the same factor in (0, 1).
    const BigRational factor = (s.target_sum - floor_sum) / (sum - floor_sum);
    for (BigRational& x : s.xs) x = s.lo + (x - s.lo) * factor;
  }
  return s;
}

SmoothingResult smooth_to_extreme(const SmoothingState& state) {
  if (state.objective_t < 3) throw std::invalid_argument("smoothing needs t >= 3");
  if (state.lo < 0 || state.lo > state.hi) throw InfeasibleState("need 0 <= lo <= hi");
  const BigRational n(static_cast<long long>(state.xs.size()));
  if (state.target_sum > n * state.hi) throw InfeasibleState("target sum exceeds n * hi");

  SmoothingResult result;
  std::vector<BigRational> xs = state.xs;
  std::vector<QuadraticNumber> values;
  values.reserve(xs.size());
  for (const BigRational& x : xs) {
    if (x > state.hi) throw InfeasibleState("entry above hi: " + to_string(x));
    if (x < 0) throw InfeasibleState("negative entry: " + to_string(x));
    values.push_back(f_t(x, state.objective_t).value);
  }
  result.objective_trace.push_back(objective(values));

  auto record = [&](std::size_t i) {
    values[i] = f_t(xs[i], state.objective_t).value;
    SurdSum next = objective(values);
    if ((next - result.objective_trace.back()).sign() < 0) result.trace_nondecreasing = false;
    result.objective_trace.push_back(std::move(next));
  };

  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (xs[i] < state.lo) {
      xs[i] = state.lo;
      ++result.raise_steps;
      record(i);
    }
  }
  BigRational sum = 0;
  for (const BigRational& x : xs) sum += x;
  if (sum > state.target_sum) throw InfeasibleState("sum exceeds the target after clamping to lo");
  for (std::size_t i = 0; i < xs.size() && sum < state.target_sum; ++i) {
    const BigRational step = std::min(state.hi - xs[i], state.target_sum - sum);
    if (step > 0) {
      xs[i] += step;
      sum += step;
      ++result.raise_steps;
      record(i);
    }
  }

  while (true) {
    std::vector<std::size_t> inner;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (interior(xs[i], state)) inner.push_back(i);
    }
    if (inner.size() < 2) break;
    const auto by_value = [&](std::size_t p, std::size_t q) { return xs[p] < xs[q]; };
    std::size_t low = *std::min_element(inner.begin(), inner.end(), by_value);
    std::size_t high = *std::max_element(inner.begin(), inner.end(), by_value);
    if (low == high) high = inner[1];
    const BigRational step = std::min(state.hi - xs[high], xs[low] - state.lo);
    xs[high] += step;
    xs[low] -= step;
    ++result.push_steps;
    values[low] = f_t(xs[low], state.objective_t).value;
    record(high);
  }

  result.entries_at_hi = static_cast<std::size_t>(std::count(xs.begin(), xs.end(), state.hi));
  if (state.hi > state.lo) {
    const BigRational width = state.hi - state.lo;
    const BigRational k = (state.target_sum - n * state.lo) / width;
    if (denominator(k) == 1) {
      std::vector<BigRational> ys;
      ys.reserve(xs.size());
      for (const BigRational& x : xs) ys.push_back((x - state.lo) / width);
      endpoint_lemma_check(ys, static_cast<long long>(numerator(k)));
    }
  }
  result.final_objective = result.objective_trace.back().as_rational();
  result.final_xs = std::move(xs);
  return result;
}

bool endpoint_lemma_check(std::span<const BigRational> ys, long long k) {
  BigRational sum = 0;
  std::size_t fractional = 0;
  for (const BigRational& y : ys) {
    if (y < 0 || y > 1) throw EndpointPreconditionError("entry outside [0, 1]: " + to_string(y));
    if (y != 0 && y != 1) ++fractional;
    sum += y;
  }
  if (sum != k) throw EndpointPreconditionError("entries sum to " + to_string(sum) + ", not " + std::to_string(k));
  if (fractional > 1) throw EndpointPreconditionError("more than one entry strictly between 0 and 1");
  const auto ones = std::count(ys.begin(), ys.end(), BigRational(1));
  if (fractional != 0 || ones != k) {
    throw EndpointLemmaViolation("sum and endpoint count disagree with the lemma");
  }
  return true;
}

}  // namespace cliquemax
