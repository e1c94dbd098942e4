#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

#include "cliquemax/algebra.hpp"

namespace cliquemax {

/// Feasible point of the relaxed triangle-profile problem: values x_i in
/// [lo, hi] with sum(x) <= target_sum, scored by sum f_t(x_i).
struct SmoothingState {
  std::vector<BigRational> xs;
  BigRational lo;
  BigRational hi;
  BigRational target_sum;
  int objective_t = 3;

  /// lo = C(b-1, 2), hi = C(max_deg, 2), target 3C(max_deg+1, 3) + 3C(b, 3).
  /// Needs xs.size() == max_deg + 1 + b, 1 <= b <= max_deg + 1, t >= 3.
  static SmoothingState from_parameters(int max_deg, int b, int t, std::vector<BigRational> xs);
};

/// Random state of the parameter class with every entry strictly between lo
/// and hi (all equal to lo when lo == hi) and sum at most the target.
SmoothingState random_state(int max_deg, int b, int t, std::mt19937_64& rng);

/// Entry above hi, lo > hi, or a sum that cannot be brought to the target.
class InfeasibleState : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct SmoothingResult {
  std::vector<BigRational> final_xs;
  /// Objective before any step and after every step.
  std::vector<SurdSum> objective_trace;
  std::size_t raise_steps = 0;
  std::size_t push_steps = 0;
  /// Every consecutive pair of the trace compared exactly.
  bool trace_nondecreasing = true;
  /// Number of entries at hi when at most one entry is interior.
  std::size_t entries_at_hi = 0;
  /// Set when the final objective is rational (no interior entry left, or
  /// the interior entry sits where f_t is rational).
  std::optional<BigRational> final_objective;
};

/// Phase 1 lifts entries below lo to lo, then raises entries in index order
/// towards hi until the sum reaches target_sum. Phase 2 repeatedly takes the
/// largest and smallest interior entries and moves them apart by the largest
/// step keeping both inside [lo, hi]; at most n-1 such steps. The final
/// configuration is checked against the endpoint lemma.
SmoothingResult smooth_to_extreme(const SmoothingState& state);

/// Preconditions of the endpoint lemma do not hold.
class EndpointPreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Preconditions hold but the conclusion fails.
class EndpointLemmaViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// With 0 <= y_i <= 1, sum(y) = k and at most one y_i outside {0, 1}: every
/// y_i is 0 or 1, exactly k of them 1. Returns true or throws.
bool endpoint_lemma_check(std::span<const BigRational> ys, long long k);

}  // namespace cliquemax
