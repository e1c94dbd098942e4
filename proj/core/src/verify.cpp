#include "cliquemax/verify.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "cliquemax/canonical.hpp"
#include "cliquemax/counting.hpp"
#include "cliquemax/enumerate.hpp"
#include "cliquemax/graph6.hpp"

namespace cliquemax {

namespace {

using Clock = std::chrono::steady_clock;

// Best value seen, how many classes attain it, and the smallest witnesses.
// Merging is commutative and associative, so task order does not matter.
struct Extremum {
  bool any = false;
  BigInt best;
  std::uint64_t count = 0;
  std::set<std::string> witnesses;

  template <class WitnessFn>
  void offer(const BigInt& value, WitnessFn&& witness, std::size_t limit) {
    if (!any || value > best) {
      any = true;
      best = value;
      count = 0;
      witnesses.clear();
    } else if (value < best) {
      return;
    }
    ++count;
    if (witnesses.size() < limit || (limit > 0 && witness() < *witnesses.rbegin())) {
      witnesses.insert(witness());
      if (witnesses.size() > limit) witnesses.erase(std::prev(witnesses.end()));
    }
  }

  void merge(const Extremum& other, std::size_t limit) {
    if (!other.any) return;
    if (!any || other.best > best) {
      *this = other;
      return;
    }
    if (other.best < best) return;
    count += other.count;
    witnesses.insert(other.witnesses.begin(), other.witnesses.end());
    while (witnesses.size() > limit) witnesses.erase(std::prev(witnesses.end()));
  }
};

struct Partial {
  std::uint64_t examined = 0;
  std::vector<Extremum> per_t;
};

int default_split_depth(int n) { return std::max(0, n - 3); }

int split_depth(const VerifyOptions& options, int n) {
  const int depth = options.split_depth < 0 ? default_split_depth(n) : options.split_depth;
  return std::min(depth, n - 1);
}

void check_options(const VerifyOptions& options) {
  if (options.jobs < 1) throw std::invalid_argument("jobs must be positive");
  if (options.witness_limit < 1) throw std::invalid_argument("witness limit must be positive");
}

// Runs work(i) for each listed index on up to `jobs` threads. Stops handing
// out tasks once stop() returns true or a task throws; the first exception
// is rethrown after all workers finish.
void for_each_task(const std::vector<std::size_t>& indices, int jobs,
                   const std::function<void(std::size_t)>& work,
                   const std::function<bool()>& stop) {
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    while (!failed.load() && !stop()) {
      const std::size_t slot = next.fetch_add(1);
      if (slot >= indices.size()) return;
      try {
        work(indices[slot]);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        failed = true;
      }
    }
  };
  const int threads = std::max(1, std::min<int>(jobs, static_cast<int>(indices.size())));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (error) std::rethrow_exception(error);
}

// Enumerates `config`, scoring each emitted graph with score(g, spectrum
// index) for every t in [t_lo, t_hi].
Partial scan_class(const EnumerationConfig& config, int t_lo, int t_hi, const VerifyOptions& options,
                   const std::function<std::vector<BigInt>(const Graph&)>& spectrum_of) {
  check_options(options);
  const auto tasks = split_tasks(config, split_depth(options, config.n));
  const std::size_t width = static_cast<std::size_t>(t_hi - t_lo + 1);
  std::vector<Partial> partials(tasks.size(), Partial{0, std::vector<Extremum>(width)});
  std::vector<std::size_t> indices(tasks.size());
  for (std::size_t i = 0; i < indices.size(); ++i) indices[i] = i;
  for_each_task(
      indices, options.jobs,
      [&](std::size_t i) {
        Partial& part = partials[i];
        run_task(tasks[i], [&](const Graph& g) {
          ++part.examined;
          const std::vector<BigInt> spectrum = spectrum_of(g);
          for (int t = t_lo; t <= t_hi; ++t) {
            const BigInt value = t < static_cast<int>(spectrum.size()) ? spectrum[t] : BigInt(0);
            part.per_t[t - t_lo].offer(value, [&] { return graph6_encode(g); }, options.witness_limit);
          }
        });
      },
      [] { return false; });
  Partial total{0, std::vector<Extremum>(width)};
  for (const Partial& p : partials) {
    total.examined += p.examined;
    for (std::size_t k = 0; k < width; ++k) total.per_t[k].merge(p.per_t[k], options.witness_limit);
  }
  return total;
}

UniquenessClass classify(const BigInt& observed, const BigInt& predicted, std::uint64_t count,
                         std::uint64_t examined) {
  if (observed != predicted) return UniquenessClass::violated;
  if (observed == 0 && count == examined) return UniquenessClass::all_graphs_trivial;
  return count == 1 ? UniquenessClass::unique : UniquenessClass::extremal_family;
}

VerificationReport base_report(std::string mode, const Extremum& ext, const BigInt& predicted,
                               std::uint64_t examined) {
  VerificationReport r;
  r.mode = std::move(mode);
  r.predicted_value = predicted;
  r.observed_max = ext.best;
  r.witnesses.assign(ext.witnesses.begin(), ext.witnesses.end());
  r.witness_count = ext.count;
  r.graphs_examined = examined;
  r.prediction_holds = ext.best == predicted;
  r.uniqueness_class = classify(ext.best, predicted, ext.count, examined);
  return r;
}

bool single_witness_matches(const VerificationReport& r, const Graph& expected) {
  return r.witness_count == 1 && r.witnesses.size() == 1 &&
         canonical_form(graph6_decode(r.witnesses.front())) == canonical_form(expected);
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void require(bool condition, const char* message) {
  if (!condition) throw std::invalid_argument(message);
}

nlohmann::json extremum_to_json(const Extremum& e) {
  nlohmann::json j;
  j["any"] = e.any;
  j["best"] = e.best.str();
  j["count"] = e.count;
  j["witnesses"] = e.witnesses;
  return j;
}

Extremum extremum_from_json(const nlohmann::json& j) {
  Extremum e;
  e.any = j.at("any").get<bool>();
  e.best = BigInt(j.at("best").get<std::string>());
  e.count = j.at("count").get<std::uint64_t>();
  for (const auto& w : j.at("witnesses")) e.witnesses.insert(w.get<std::string>());
  return e;
}

}  // namespace

std::string to_string(UniquenessClass c) {
  switch (c) {
    case UniquenessClass::unique: return "unique";
    case UniquenessClass::extremal_family: return "extremal_family";
    case UniquenessClass::all_graphs_trivial: return "all_graphs_trivial";
    case UniquenessClass::violated: return "violated";
  }
  return "violated";
}

std::string to_string(FamilyCheck c) {
  switch (c) {
    case FamilyCheck::not_applicable: return "not_applicable";
    case FamilyCheck::passed: return "passed";
    case FamilyCheck::failed: return "failed";
  }
  return "failed";
}

UniquenessClass uniqueness_class_from_string(const std::string& s) {
  for (auto c : {UniquenessClass::unique, UniquenessClass::extremal_family,
                 UniquenessClass::all_graphs_trivial, UniquenessClass::violated}) {
    if (to_string(c) == s) return c;
  }
  throw std::invalid_argument("unknown uniqueness class: " + s);
}

FamilyCheck family_check_from_string(const std::string& s) {
  for (auto c : {FamilyCheck::not_applicable, FamilyCheck::passed, FamilyCheck::failed}) {
    if (to_string(c) == s) return c;
  }
  throw std::invalid_argument("unknown family check: " + s);
}

bool VerificationReport::claims_hold() const {
  if (scope_warning) return true;
  return prediction_holds && family_check != FamilyCheck::failed;
}

bool VerificationReport::same_outcome(const VerificationReport& o) const {
  return mode == o.mode && parameters == o.parameters && predicted_value == o.predicted_value &&
         observed_max == o.observed_max && witnesses == o.witnesses && witness_count == o.witness_count &&
         prediction_holds == o.prediction_holds && uniqueness_class == o.uniqueness_class &&
         family_check == o.family_check && scope_warning == o.scope_warning &&
         graphs_examined == o.graphs_examined;
}

std::vector<VerificationReport> verify_theorem_range(int n, int min_deg, int t_lo, int t_hi,
                                                     const VerifyOptions& options) {
  require(n >= 2 && n <= 10, "verify-theorem needs 2 <= n <= 10");
  require(min_deg >= 1 && 2 * min_deg <= n, "verify-theorem needs 1 <= delta <= n/2");
  require(t_lo >= 2 && t_lo <= t_hi && t_hi <= n, "verify-theorem needs 2 <= t <= t_max <= n");
  const auto start = Clock::now();
  const Partial total = scan_class(EnumerationConfig::min_degree(n, min_deg), t_lo, t_hi, options,
                                   [](const Graph& g) { return clique_spectrum(complement(g)); });
  const Graph bipartite = complete_bipartite(min_deg, n - min_deg);
  std::vector<VerificationReport> reports;
  for (int t = t_lo; t <= t_hi; ++t) {
    VerificationReport r = base_report("theorem", total.per_t[t - t_lo],
                                       extremal_value_independent(n, min_deg, t), total.examined);
    r.parameters.n = n;
    r.parameters.min_degree = min_deg;
    r.parameters.t = t;
    if (t < 3) {
      r.scope_warning = "t = 2 is outside the theorem; the extremal graph may differ";
    } else if (t <= min_deg) {
      r.family_check = single_witness_matches(r, bipartite) ? FamilyCheck::passed : FamilyCheck::failed;
    }
    r.elapsed_seconds = seconds_since(start);
    reports.push_back(std::move(r));
  }
  return reports;
}

VerificationReport verify_theorem_main(int n, int min_deg, int t, const VerifyOptions& options) {
  return verify_theorem_range(n, min_deg, t, t, options).front();
}

std::vector<VerificationReport> verify_prop_range(int max_deg, int b, int t_lo, int t_hi,
                                                  const VerifyOptions& options) {
  require(max_deg >= 0 && b >= 1 && b <= max_deg + 1, "verify-prop needs 1 <= b <= delta+1");
  const int n = max_deg + 1 + b;
  require(n <= 10, "verify-prop needs delta+1+b <= 10");
  require(t_lo >= 3 && t_lo <= t_hi && t_hi <= n, "verify-prop needs 3 <= t <= t_max <= n");
  const auto start = Clock::now();
  const Partial total = scan_class(EnumerationConfig::max_degree(n, max_deg), t_lo, t_hi, options,
                                   [](const Graph& g) { return clique_spectrum(g); });

  const Graph big = complete(max_deg + 1);
  std::set<CanonicalForm> family;
  for (const Graph& h : collect_graphs(EnumerationConfig::all_graphs(b))) {
    family.insert(canonical_form(disjoint_union(big, h)));
  }

  std::vector<VerificationReport> reports;
  for (int t = t_lo; t <= t_hi; ++t) {
    VerificationReport r = base_report("prop", total.per_t[t - t_lo],
                                       extremal_value_cliques(max_deg, b, t), total.examined);
    r.parameters.n = n;
    r.parameters.max_degree = max_deg;
    r.parameters.b = b;
    r.parameters.t = t;
    if (t <= b) {
      r.family_check = single_witness_matches(r, disjoint_union(big, complete(b))) ? FamilyCheck::passed
                                                                                     : FamilyCheck::failed;
    } else if (t <= max_deg + 1) {
      // Stored witnesses may be capped; the count is always exact.
      bool ok = r.witness_count == family.size();
      for (const std::string& w : r.witnesses) {
        ok = ok && family.contains(canonical_form(graph6_decode(w)));
      }
      r.family_check = ok ? FamilyCheck::passed : FamilyCheck::failed;
    }
    r.elapsed_seconds = seconds_since(start);
    reports.push_back(std::move(r));
  }
  return reports;
}

VerificationReport verify_prop_cmp(int max_deg, int b, int t, const VerifyOptions& options) {
  return verify_prop_range(max_deg, b, t, t, options).front();
}

std::string config_hash(const std::string& description) {
  std::uint64_t hash = 14695981039346656037ULL;
  for (unsigned char c : description) {
    hash ^= c;
    hash *= 1099511628211ULL;
  }
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << hash;
  return out.str();
}

VerificationReport search_open_conjecture(int a, int max_deg, int b, int t, const SearchOptions& options) {
  require(a >= 1 && max_deg >= 0 && b >= 0 && b <= max_deg, "search-open needs a >= 1 and 0 <= b <= delta");
  require(t >= 3, "search-open needs t >= 3");
  const int n = a * (max_deg + 1) + b;
  require(n <= 11, "search-open needs a(delta+1)+b <= 11");
  check_options(options);
  const auto start = Clock::now();

  const EnumerationConfig config = EnumerationConfig::max_degree(n, max_deg);
  const int depth = split_depth(options, n);
  const auto tasks = split_tasks(config, depth);
  std::ostringstream describe;
  describe << "open;a=" << a << ";delta=" << max_deg << ";b=" << b << ";t=" << t
           << ";witness_limit=" << options.witness_limit << ";depth=" << depth << ';' << config.describe();
  const std::string hash = config_hash(describe.str());

  std::vector<std::string> prefixes;
  prefixes.reserve(tasks.size());
  for (const auto& task : tasks) prefixes.push_back(graph6_encode(task.prefix));

  std::vector<std::optional<Partial>> done(tasks.size());
  if (!options.ledger.empty()) {
    if (options.resume) {
      std::ifstream in(options.ledger);
      std::string line;
      while (std::getline(in, line)) {
        try {
          const auto j = nlohmann::json::parse(line);
          if (j.at("config_hash").get<std::string>() != hash) continue;
          const auto index = j.at("task").get<std::size_t>();
          if (index >= tasks.size() || j.at("prefix").get<std::string>() != prefixes[index]) continue;
          done[index] = Partial{j.at("examined").get<std::uint64_t>(), {extremum_from_json(j.at("result"))}};
        } catch (const std::exception&) {
          // A torn final line from an interrupted run; the task is redone.
        }
      }
    } else {
      std::ofstream truncate(options.ledger, std::ios::trunc);
    }
  }

  std::vector<std::size_t> pending;
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    if (!done[i]) pending.push_back(i);
  }

  std::ofstream ledger;
  if (!options.ledger.empty()) {
    ledger.open(options.ledger, std::ios::app);
    if (!ledger) throw std::runtime_error("cannot open ledger " + options.ledger.string());
    // Start on a fresh line if the last write was torn.
    std::ifstream tail(options.ledger, std::ios::binary | std::ios::ate);
    if (tail && tail.tellg() > 0) {
      tail.seekg(-1, std::ios::end);
      if (tail.get() != '\n') ledger << '\n' << std::flush;
    }
  }
  std::mutex ledger_mutex;
  std::atomic<std::size_t> completed{0};
  auto stop = [&] {
    if (options.cancel && options.cancel->load()) return true;
    return options.max_new_tasks && completed.load() >= *options.max_new_tasks;
  };
  for_each_task(
      pending, options.jobs,
      [&](std::size_t i) {
        Partial part{0, std::vector<Extremum>(1)};
        run_task(tasks[i], [&](const Graph& g) {
          ++part.examined;
          part.per_t[0].offer(count_cliques(g, t), [&] { return graph6_encode(g); }, options.witness_limit);
        });
        std::lock_guard lock(ledger_mutex);
        if (ledger.is_open()) {
          nlohmann::json j;
          j["config_hash"] = hash;
          j["task"] = i;
          j["prefix"] = prefixes[i];
          j["examined"] = part.examined;
          j["result"] = extremum_to_json(part.per_t[0]);
          ledger << j.dump() << '\n' << std::flush;
        }
        done[i] = std::move(part);
        ++completed;
      },
      stop);

  const auto missing = std::count_if(done.begin(), done.end(), [](const auto& d) { return !d; });
  if (missing > 0) {
    throw SearchInterrupted("search stopped with " + std::to_string(missing) + " of " +
                            std::to_string(tasks.size()) + " tasks outstanding");
  }

  Partial total{0, std::vector<Extremum>(1)};
  for (const auto& d : done) {
    total.examined += d->examined;
    total.per_t[0].merge(d->per_t[0], options.witness_limit);
  }
  const BigInt predicted = a * binomial(max_deg + 1, t) + binomial(b, t);
  VerificationReport r = base_report("open", total.per_t[0], predicted, total.examined);
  r.parameters.n = n;
  r.parameters.a = a;
  r.parameters.max_degree = max_deg;
  r.parameters.b = b;
  r.parameters.t = t;
  r.elapsed_seconds = seconds_since(start);
  return r;
}

TriangleCase lemma_t3_case_split(const Graph& g, int b) {
  const int n = g.order();
  const int max_deg = n - 1 - b;
  require(b >= 1 && max_deg >= 0 && b <= max_deg + 1, "case split needs 1 <= b <= delta+1");
  require(n > 0 && *max_degree(g) <= max_deg, "graph exceeds the maximum degree of its class");

  const CliqueProfile k3 = clique_profile(g, 3);
  const BigInt threshold = binomial(b - 1, 2);
  for (int v = 0; v < n; ++v) {
    if (k3.per_vertex[v] <= threshold) return LowTriangleVertex{v, k3.per_vertex[v]};
  }
  AllHighTriangles high;
  high.triangles = k3.total;
  high.degree_bound = k3_upper_bound(g);
  high.uniform_bound = BigRational(binomial(n, 3)) - BigRational(BigInt(n) * b * max_deg, 2);
  high.closed_form = BigRational(binomial(max_deg + 1, 3) + binomial(b, 3)) -
                     BigRational(BigInt(b) * (max_deg + 1 - b), 2);
  high.extremal = binomial(max_deg + 1, 3) + binomial(b, 3);
  high.degrees_in_range = true;
  for (int v = 0; v < n; ++v) {
    const int d = degree(g, v);
    high.degrees_in_range = high.degrees_in_range && b <= d && d <= max_deg;
  }
  high.chain_holds = high.degrees_in_range && BigRational(high.triangles) <= high.degree_bound &&
                     high.degree_bound <= high.uniform_bound && high.uniform_bound == high.closed_form &&
                     high.closed_form < BigRational(high.extremal);
  return high;
}

CaseSplitScan lemma_t3_scan(int max_deg, int b) {
  CaseSplitScan scan;
  enumerate_graphs(EnumerationConfig::max_degree(max_deg + 1 + b, max_deg), [&](const Graph& g) {
    ++scan.graphs;
    const TriangleCase c = lemma_t3_case_split(g, b);
    if (const auto* high = std::get_if<AllHighTriangles>(&c)) {
      ++scan.all_high;
      scan.all_chains_hold = scan.all_chains_hold && high->chain_holds;
    } else {
      ++scan.low_vertex;
    }
  });
  return scan;
}

}  // namespace cliquemax
