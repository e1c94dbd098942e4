#pragma once

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "cliquemax/algebra.hpp"
#include "cliquemax/graph.hpp"

namespace cliquemax {

enum class UniquenessClass { unique, extremal_family, all_graphs_trivial, violated };
enum class FamilyCheck { not_applicable, passed, failed };

std::string to_string(UniquenessClass c);
std::string to_string(FamilyCheck c);
UniquenessClass uniqueness_class_from_string(const std::string& s);
FamilyCheck family_check_from_string(const std::string& s);

struct ReportParameters {
  std::optional<int> n;
  std::optional<int> min_degree;
  std::optional<int> max_degree;
  std::optional<int> b;
  std::optional<int> a;
  int t = 0;

  bool operator==(const ReportParameters&) const = default;
};

/// Outcome of one exhaustive run.
///
/// mode is "theorem" (independent sets under a minimum degree), "prop"
/// (cliques under a maximum degree, one big clique) or "open" (a copies of
/// the big clique). Witnesses are graph6 strings of the class
/// representatives attaining observed_max: sorted, at most the witness limit
/// of them, while witness_count is the exact number of extremal classes.
struct VerificationReport {
  std::string mode;
  ReportParameters parameters;
  BigInt predicted_value;
  BigInt observed_max;
  std::vector<std::string> witnesses;
  std::uint64_t witness_count = 0;
  bool prediction_holds = false;
  UniquenessClass uniqueness_class = UniquenessClass::violated;
  FamilyCheck family_check = FamilyCheck::not_applicable;
  std::optional<std::string> scope_warning;
  std::uint64_t graphs_examined = 0;
  double elapsed_seconds = 0.0;

  /// Every asserted claim held: the prediction and, where one is made, the
  /// extremal-family statement. Runs flagged out of scope assert nothing.
  bool claims_hold() const;
  /// Field equality ignoring elapsed time.
  bool same_outcome(const VerificationReport& other) const;
};

struct VerifyOptions {
  int jobs = 1;
  std::size_t witness_limit = 1000;
  /// Generation-tree level at which work is split into tasks; negative
  /// picks a default from n.
  int split_depth = -1;
};

/// Raised when an interrupted search stops early; completed tasks are
/// already in the ledger.
class SearchInterrupted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SearchOptions : VerifyOptions {
  /// Ledger of completed tasks; empty disables persistence.
  std::filesystem::path ledger;
  /// Reuse matching ledger entries; false truncates the ledger first.
  bool resume = true;
  /// Stop after this many newly completed tasks (simulated interruption).
  std::optional<std::size_t> max_new_tasks;
  /// Checked between tasks.
  const std::atomic<bool>* cancel = nullptr;
};

/// i_t over n-vertex graphs with minimum degree >= min_deg against
/// C(min_deg, t) + C(n - min_deg, t). For t <= min_deg the single extremal
/// class must be K_{min_deg, n-min_deg}. t = 2 runs but carries a scope
/// warning. Requires 1 <= min_deg <= n/2, 2 <= t <= n, n <= 10.
VerificationReport verify_theorem_main(int n, int min_deg, int t, const VerifyOptions& options = {});
/// One report per t in [t_lo, t_hi] from a single enumeration.
std::vector<VerificationReport> verify_theorem_range(int n, int min_deg, int t_lo, int t_hi,
                                                     const VerifyOptions& options = {});

/// k_t over graphs on max_deg+1+b vertices with maximum degree <= max_deg
/// against C(max_deg+1, t) + C(b, t). For t <= b the extremal class is
/// exactly K_{max_deg+1} + K_b; for b < t <= max_deg+1 it is
/// {K_{max_deg+1} + H : H on b vertices}; beyond that k_t vanishes
/// identically. Requires 1 <= b <= max_deg+1, t >= 3, max_deg+1+b <= 10.
VerificationReport verify_prop_cmp(int max_deg, int b, int t, const VerifyOptions& options = {});
std::vector<VerificationReport> verify_prop_range(int max_deg, int b, int t_lo, int t_hi,
                                                  const VerifyOptions& options = {});

/// Exhaustive max of k_t over graphs on a(max_deg+1)+b vertices with maximum
/// degree <= max_deg, compared with a K_{max_deg+1} + K_b. The report states
/// the outcome; violated means a counterexample was found. Requires a >= 1,
/// 0 <= b <= max_deg, t >= 3, a(max_deg+1)+b <= 11.
VerificationReport search_open_conjecture(int a, int max_deg, int b, int t,
                                          const SearchOptions& options = {});

/// Stable 64-bit FNV-1a of a run description, as 16 hex digits.
std::string config_hash(const std::string& description);

/// A vertex with k_3(v) <= C(b-1, 2).
struct LowTriangleVertex {
  int vertex = 0;
  BigInt triangles;
};

/// Every vertex has k_3(v) > C(b-1, 2); the chain
/// k_3 <= C(n,3) - (1/2) sum d(n-1-d) <= C(n,3) - n b D / 2
///     = C(D+1,3) + C(b,3) - b(D+1-b)/2 < C(D+1,3) + C(b,3)
/// evaluated for this graph.
struct AllHighTriangles {
  BigInt triangles;
  BigRational degree_bound;  // C(n,3) - (1/2) sum d(n-1-d)
  BigRational uniform_bound;  // C(n,3) - n b D / 2
  BigRational closed_form;  // C(D+1,3) + C(b,3) - b(D+1-b)/2
  BigInt extremal;  // C(D+1,3) + C(b,3)
  bool degrees_in_range = false;  // b <= d(v) <= D for all v
  bool chain_holds = false;
};

using TriangleCase = std::variant<LowTriangleVertex, AllHighTriangles>;

/// Splits a graph of the class (D+1+b vertices, maximum degree <= D, with D
/// inferred from n and b) into the two cases of the triangle argument.
/// Throws std::invalid_argument outside the class.
TriangleCase lemma_t3_case_split(const Graph& g, int b);

struct CaseSplitScan {
  std::uint64_t graphs = 0;
  std::uint64_t low_vertex = 0;
  std::uint64_t all_high = 0;
  bool all_chains_hold = true;
};

/// Runs the case split on every class with maximum degree <= max_deg on
/// max_deg+1+b vertices.
CaseSplitScan lemma_t3_scan(int max_deg, int b);

}  // namespace cliquemax
