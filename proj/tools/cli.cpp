#include "cli.hpp"

#include <atomic>
#include <csignal>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <thread>

#if __has_include(<CLI11.hpp>)
#include <CLI11.hpp>
#else
#include <CLI/CLI.hpp>
#endif

#include "cliquemax/cache.hpp"
#include "cliquemax/canonical.hpp"
#include "cliquemax/counting.hpp"
#include "cliquemax/enumerate.hpp"
#include "cliquemax/graph6.hpp"
#include "cliquemax/kk_bounds.hpp"
#include "cliquemax/report.hpp"
#include "cliquemax/smoothing.hpp"
#include "cliquemax/verify.hpp"

namespace cliquemax::cli {

namespace {

namespace fs = std::filesystem;

std::atomic<bool> interrupted{false};

extern "C" void on_interrupt(int) { interrupted = true; }

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Options {
  std::optional<int> n;
  std::optional<int> delta;
  std::optional<int> b;
  std::optional<int> a;
  std::optional<int> t;
  std::optional<int> t_max;
  int jobs = std::max(1U, std::thread::hardware_concurrency());
  std::string out;
  bool resume = false;
  bool fresh = false;
  std::vector<std::string> graph6;
  std::string input;
  std::size_t witness_limit = 1000;
  // Subcommand-specific extras.
  std::string x;
  std::optional<int> min_degree;
  std::optional<int> edges;
  bool connected = false;
  bool count_only = false;
  std::uint64_t seed = 1;
  std::optional<std::size_t> stop_after;
  bool no_cache = false;
};

using Params = std::vector<std::pair<std::string, std::string>>;

void param(Params& p, const char* key, const std::optional<int>& value) {
  if (value) p.emplace_back(key, std::to_string(*value));
}

int need(const std::optional<int>& value, const char* flag) {
  if (!value) throw UsageError(std::string(flag) + " is required");
  return *value;
}

/// What a subcommand produced before anything is written.
struct Outcome {
  Params params;
  Json body;
  std::string summary;
  std::vector<std::pair<fs::path, std::vector<std::string>>> graph6_files;
  int code = kExitOk;
};

fs::path sibling(const std::string& out, const std::string& suffix) {
  fs::path p(out);
  p.replace_extension(suffix);
  return p;
}

int finish(const std::string& subcommand, const Options& o, Outcome result, std::string started_at,
           std::vector<std::string> extra_artifacts, std::ostream& out) {
  RunManifest manifest = RunManifest::create(subcommand, result.params);
  manifest.started_at = std::move(started_at);
  manifest.artifacts = std::move(extra_artifacts);
  if (!o.out.empty()) {
    for (const auto& [path, lines] : result.graph6_files) {
      std::ofstream file(path, std::ios::trunc);
      if (!file) throw ReportIoError("cannot write " + path.string());
      for (const auto& line : lines) file << line << '\n';
      manifest.artifacts.push_back(path.string());
    }
  }
  manifest.finished_at = timestamp_now();
  if (o.out.empty()) {
    out << document_json(manifest, result.body).dump(2) << '\n';
  } else {
    write_document(o.out, manifest, result.body);
    out << result.summary;
  }
  return result.code;
}

std::vector<Graph> input_graphs(const Options& o) {
  std::vector<Graph> graphs;
  for (const auto& text : o.graph6) graphs.push_back(graph6_decode(text));
  if (!o.input.empty()) {
    std::ifstream in(o.input);
    if (!in) throw UsageError("cannot read " + o.input);
    for (auto& g : read_graph6_lines(in)) graphs.push_back(std::move(g));
  }
  if (graphs.empty()) throw UsageError("no graphs given; use --graph6 or --input");
  return graphs;
}

Params graph_params(const Options& o) {
  Params p;
  for (const auto& text : o.graph6) p.emplace_back("graph6", text);
  if (!o.input.empty()) p.emplace_back("input", o.input);
  return p;
}

Outcome run_count(const Options& o, std::ostream& err) {
  Outcome r;
  r.params = graph_params(o);
  param(r.params, "t", o.t);
  if (o.t && *o.t < 0) throw UsageError("--t must be non-negative");
  std::optional<CliqueCache> cache;
  if (!o.no_cache) cache.emplace(CliqueCache::default_directory(), err);
  std::ostringstream summary;
  Json rows = Json::array();
  for (const Graph& g : input_graphs(o)) {
    Json row;
    row["graph6"] = graph6_encode(g);
    row["n"] = std::to_string(g.order());
    if (o.t) {
      const BigInt value = cache ? cache->count(g, *o.t) : count_cliques(g, *o.t);
      row["t"] = std::to_string(*o.t);
      row["k_t"] = value.str();
      summary << row["graph6"].get<std::string>() << " k_" << *o.t << " = " << value << '\n';
    } else {
      const std::vector<BigInt> spectrum = clique_spectrum(g);
      Json values = Json::array();
      summary << row["graph6"].get<std::string>() << " spectrum";
      const bool cacheable = cache && g.order() > 0 && g.order() <= kMaxCanonicalOrder;
      const std::string cert = cacheable ? canonical_form(g).certificate : std::string();
      for (std::size_t t = 0; t < spectrum.size(); ++t) {
        values.push_back(spectrum[t].str());
        summary << ' ' << spectrum[t];
        if (cacheable) cache->put(cert, static_cast<int>(t), spectrum[t]);
      }
      summary << '\n';
      row["spectrum"] = values;
    }
    rows.push_back(row);
  }
  if (cache) cache->flush();
  r.body["graphs"] = rows;
  r.summary = summary.str();
  return r;
}

Outcome run_identity(const Options& o) {
  Outcome r;
  r.params = graph_params(o);
  std::ostringstream summary;
  Json rows = Json::array();
  bool all = true;
  for (const Graph& g : input_graphs(o)) {
    const TriangleIdentity id = triangle_complement_identity(g);
    Json row;
    row["graph6"] = graph6_encode(g);
    row["lhs"] = id.lhs.str();
    row["rhs"] = id.rhs.str();
    row["holds"] = id.holds;
    rows.push_back(row);
    all = all && id.holds;
    summary << row["graph6"].get<std::string>() << ' ' << id.lhs << (id.holds ? " == " : " != ") << id.rhs << '\n';
  }
  r.body["graphs"] = rows;
  r.body["all_hold"] = all;
  r.summary = summary.str();
  r.code = all ? kExitOk : kExitClaimViolated;
  return r;
}

bool is_clique_edge_count(long long m, int k, int n_max) {
  for (long long j = k; j <= n_max; ++j) {
    if (j * (j - 1) / 2 == m) return true;
  }
  return false;
}

Outcome run_kk_check(const Options& o) {
  Outcome r;
  const int n_max = o.n.value_or(8);
  r.params.emplace_back("n", std::to_string(n_max));
  param(r.params, "t", o.t);
  std::vector<int> ks = o.t ? std::vector<int>{*o.t} : std::vector<int>{3, 4};
  for (int k : ks) {
    if (k < 3) throw UsageError("--t must be at least 3");
  }
  std::ostringstream summary;
  Json tables = Json::array();
  bool all = true;
  for (int k : ks) {
    const std::vector<BigInt> oracle = kk_oracle_table(k, n_max);
    Json rows = Json::array();
    bool ok = true;
    for (std::size_t m = 0; m < oracle.size(); ++m) {
      const QuadraticNumber bound = kk_clique_bound(static_cast<long long>(m), k);
      const auto cmp = compare(QuadraticNumber(BigRational(oracle[m])), bound);
      const bool within = cmp != std::strong_ordering::greater;
      const bool tight = cmp == std::strong_ordering::equal && bound.sign() > 0;
      const bool clique_count = is_clique_edge_count(static_cast<long long>(m), k, n_max);
      ok = ok && within && tight == clique_count;
      Json row;
      row["m"] = std::to_string(m);
      row["oracle"] = oracle[m].str();
      row["bound"] = to_json(bound);
      row["within_bound"] = within;
      row["tight"] = tight;
      row["clique_edge_count"] = clique_count;
      rows.push_back(row);
    }
    Json table;
    table["k"] = std::to_string(k);
    table["holds"] = ok;
    table["rows"] = rows;
    tables.push_back(table);
    all = all && ok;
    summary << "k=" << k << " n_max=" << n_max << " m=0.." << oracle.size() - 1 << ": "
            << (ok ? "bound holds, tight exactly at C(j,2)" : "VIOLATED") << '\n';
  }
  r.body["tables"] = tables;
  r.body["holds"] = all;
  r.summary = summary.str();
  r.code = all ? kExitOk : kExitClaimViolated;
  return r;
}

Json rationals(const std::vector<BigRational>& xs) {
  Json a = Json::array();
  for (const auto& x : xs) a.push_back(to_string(x));
  return a;
}

Outcome run_ft(const Options& o) {
  Outcome r;
  const int t = need(o.t, "--t");
  if (t < 3) throw UsageError("--t must be at least 3");
  r.params.emplace_back("t", std::to_string(t));
  std::ostringstream summary;
  if (!o.x.empty()) {
    r.params.emplace_back("x", o.x);
    const BigRational x = parse_rational(o.x);
    const FtBound f = f_t(x, t);
    r.body["t"] = std::to_string(t);
    r.body["x"] = to_string(x);
    r.body["branch"] = f.branch == FtBranch::zero ? "zero" : "kk";
    r.body["value"] = to_json(f.value);
    r.body["derivative_approx"] = f_t_derivative(static_cast<double>(x), t);
    summary << "f_" << t << '(' << to_string(x) << ") = " << f.value.to_string() << " ~ " << f.value.to_double()
            << '\n';
    r.summary = summary.str();
    return r;
  }
  const int end = o.n.value_or(200);
  if (end < 2) throw UsageError("--n (grid end) must be at least 2");
  r.params.emplace_back("n", std::to_string(end));
  std::vector<BigRational> grid;
  for (int x = 0; x <= end; ++x) grid.emplace_back(x);
  const ConvexityReport c = f_t_convexity_check(t, grid);
  r.body["t"] = std::to_string(t);
  r.body["grid"] = "0.." + std::to_string(end);
  r.body["triples"] = std::to_string(c.triples);
  r.body["pairs"] = std::to_string(c.pairs);
  r.body["convex"] = c.convex;
  r.body["strictly_convex"] = c.strictly_convex;
  r.body["monotone"] = c.monotone;
  r.body["strictly_increasing"] = c.strictly_increasing;
  r.body["flat_points"] = rationals(c.flat_points);
  r.body["violations"] = rationals(c.violations);
  const bool ok = c.convex && c.strictly_convex && c.monotone && c.strictly_increasing;
  summary << "f_" << t << " on 0.." << end << ": " << (ok ? "convex and increasing" : "VIOLATED") << '\n';
  r.summary = summary.str();
  r.code = ok ? kExitOk : kExitClaimViolated;
  return r;
}

std::string describe(const VerificationReport& v) {
  std::ostringstream s;
  s << v.mode;
  if (v.parameters.n) s << " n=" << *v.parameters.n;
  if (v.parameters.a) s << " a=" << *v.parameters.a;
  if (v.parameters.min_degree) s << " delta=" << *v.parameters.min_degree;
  if (v.parameters.max_degree) s << " delta=" << *v.parameters.max_degree;
  if (v.parameters.b) s << " b=" << *v.parameters.b;
  s << " t=" << v.parameters.t << ": observed " << v.observed_max << ", predicted " << v.predicted_value << ", "
    << (v.prediction_holds ? "attained" : "NOT attained") << ", " << to_string(v.uniqueness_class) << " ("
    << v.witness_count << " extremal classes of " << v.graphs_examined << ")";
  if (v.family_check != FamilyCheck::not_applicable) s << ", family " << to_string(v.family_check);
  if (v.scope_warning) s << ", warning: " << *v.scope_warning;
  return s.str() + '\n';
}

Outcome report_outcome(const Options& o, Params params, const std::vector<VerificationReport>& reports) {
  Outcome r;
  r.params = std::move(params);
  if (reports.size() == 1) {
    r.body = to_json(reports.front());
    if (!o.out.empty()) r.graph6_files.emplace_back(sibling(o.out, ".witnesses.g6"), reports.front().witnesses);
  } else {
    r.body = Json::array();
    for (const auto& v : reports) {
      r.body.push_back(to_json(v));
      if (!o.out.empty()) {
        r.graph6_files.emplace_back(sibling(o.out, ".t" + std::to_string(v.parameters.t) + ".witnesses.g6"),
                                    v.witnesses);
      }
    }
  }
  for (const auto& v : reports) {
    r.summary += describe(v);
    if (!v.claims_hold()) r.code = kExitClaimViolated;
  }
  return r;
}

VerifyOptions verify_options(const Options& o) {
  VerifyOptions v;
  v.jobs = o.jobs;
  v.witness_limit = o.witness_limit;
  return v;
}

Params verify_params(const Options& o) {
  Params p;
  param(p, "n", o.n);
  param(p, "a", o.a);
  param(p, "delta", o.delta);
  param(p, "b", o.b);
  param(p, "t", o.t);
  param(p, "t_max", o.t_max);
  p.emplace_back("witness_limit", std::to_string(o.witness_limit));
  return p;
}

int t_high(const Options& o, int t) {
  if (o.t_max && *o.t_max < t) throw UsageError("--t-max must be at least --t");
  return o.t_max.value_or(t);
}

Outcome run_verify_theorem(const Options& o) {
  const int t = need(o.t, "--t");
  const auto reports =
      verify_theorem_range(need(o.n, "--n"), need(o.delta, "--delta"), t, t_high(o, t), verify_options(o));
  return report_outcome(o, verify_params(o), reports);
}

Outcome run_verify_prop(const Options& o) {
  const int t = need(o.t, "--t");
  const auto reports =
      verify_prop_range(need(o.delta, "--delta"), need(o.b, "--b"), t, t_high(o, t), verify_options(o));
  return report_outcome(o, verify_params(o), reports);
}

Outcome run_search_open(const Options& o, std::vector<std::string>& artifacts) {
  SearchOptions s;
  s.jobs = o.jobs;
  s.witness_limit = o.witness_limit;
  s.resume = !o.fresh;
  s.max_new_tasks = o.stop_after;
  s.cancel = &interrupted;
  if (!o.out.empty()) {
    s.ledger = sibling(o.out, ".ledger.jsonl");
    artifacts.push_back(s.ledger.string());
  }
  interrupted = false;
  const auto previous = std::signal(SIGINT, on_interrupt);
  try {
    const VerificationReport v =
        search_open_conjecture(need(o.a, "--a"), need(o.delta, "--delta"), need(o.b, "--b"), need(o.t, "--t"), s);
    std::signal(SIGINT, previous);
    return report_outcome(o, verify_params(o), {v});
  } catch (...) {
    std::signal(SIGINT, previous);
    throw;
  }
}

Outcome run_smooth_demo(const Options& o) {
  Outcome r;
  const int delta = need(o.delta, "--delta");
  const int b = need(o.b, "--b");
  const int t = need(o.t, "--t");
  r.params.emplace_back("delta", std::to_string(delta));
  r.params.emplace_back("b", std::to_string(b));
  r.params.emplace_back("t", std::to_string(t));
  SmoothingState state;
  if (o.graph6.size() > 1) throw UsageError("smooth-demo takes at most one --graph6");
  if (!o.graph6.empty()) {
    r.params.emplace_back("graph6", o.graph6.front());
    const Graph g = graph6_decode(o.graph6.front());
    if (g.order() != delta + 1 + b || *max_degree(g) > delta) {
      throw UsageError("graph must have delta+1+b vertices and maximum degree at most delta");
    }
    std::vector<BigRational> xs;
    for (const BigInt& k : clique_profile(g, 3).per_vertex) xs.emplace_back(k);
    state = SmoothingState::from_parameters(delta, b, t, std::move(xs));
  } else {
    r.params.emplace_back("seed", std::to_string(o.seed));
    std::mt19937_64 rng(o.seed);
    state = random_state(delta, b, t, rng);
  }
  const SmoothingResult result = smooth_to_extreme(state);
  const BigRational expected(BigInt(t) * (binomial(delta + 1, t) + binomial(b, t)));
  const bool ok = result.trace_nondecreasing && result.final_objective == expected;

  r.body["delta"] = std::to_string(delta);
  r.body["b"] = std::to_string(b);
  r.body["t"] = std::to_string(t);
  r.body["lo"] = to_string(state.lo);
  r.body["hi"] = to_string(state.hi);
  r.body["target_sum"] = to_string(state.target_sum);
  r.body["initial_xs"] = rationals(state.xs);
  r.body["final_xs"] = rationals(result.final_xs);
  r.body["raise_steps"] = std::to_string(result.raise_steps);
  r.body["push_steps"] = std::to_string(result.push_steps);
  Json trace = Json::array();
  for (const auto& v : result.objective_trace) trace.push_back(v.to_double());
  r.body["objective_trace_approx"] = trace;
  r.body["trace_nondecreasing"] = result.trace_nondecreasing;
  r.body["final_objective"] = result.final_objective ? Json(to_string(*result.final_objective)) : Json(nullptr);
  r.body["expected_objective"] = to_string(expected);
  r.body["holds"] = ok;

  std::ostringstream summary;
  summary << "smoothing delta=" << delta << " b=" << b << " t=" << t << ": " << result.raise_steps << " raise steps, "
          << result.push_steps << " push steps, final objective "
          << (result.final_objective ? to_string(*result.final_objective) : std::string("irrational"))
          << ", expected " << to_string(expected) << (ok ? "" : " VIOLATED") << '\n';
  r.summary = summary.str();
  r.code = ok ? kExitOk : kExitClaimViolated;
  return r;
}

int run_enumerate(const Options& o, const std::string& started_at, std::ostream& out) {
  const int n = need(o.n, "--n");
  EnumerationConfig config = o.min_degree ? EnumerationConfig::min_degree(n, *o.min_degree)
                                          : EnumerationConfig::max_degree(n, o.delta.value_or(n - 1));
  config.edge_count = o.edges;
  config.connected_only = o.connected;
  config.validate();

  Outcome r;
  param(r.params, "n", o.n);
  param(r.params, "delta", o.delta);
  param(r.params, "min_degree", o.min_degree);
  param(r.params, "edges", o.edges);
  if (o.connected) r.params.emplace_back("connected", "1");

  std::vector<std::string> lines;
  std::uint64_t count = 0;
  enumerate_graphs(config, [&](const Graph& g) {
    ++count;
    if (!o.count_only) lines.push_back(graph6_encode(g));
  });
  if (o.out.empty()) {
    if (o.count_only) {
      out << count << '\n';
    } else {
      for (const auto& line : lines) out << line << '\n';
    }
    return kExitOk;
  }
  r.body["config"] = config.describe();
  r.body["count"] = std::to_string(count);
  r.summary = std::to_string(count) + " classes (" + config.describe() + ")\n";
  if (!o.count_only) r.graph6_files.emplace_back(sibling(o.out, ".g6"), std::move(lines));
  return finish("enumerate", o, std::move(r), started_at, {}, out);
}

void add_graph_input(CLI::App* sub, Options& o) {
  sub->add_option("--graph6", o.graph6, "Graph in graph6 (repeatable)");
  sub->add_option("--input", o.input, "File of newline-delimited graph6");
}

void add_search_limits(CLI::App* sub, Options& o) {
  sub->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
  sub->add_option("--witness-limit", o.witness_limit, "Most witnesses stored per report");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact clique and independent-set extremal checks", "cliquemax"};
  app.require_subcommand(1, 1);

  auto* count = app.add_subcommand("count", "k_t of graphs (or the whole clique spectrum)");
  add_graph_input(count, o);
  count->add_option("--t", o.t, "Clique order");
  count->add_flag("--no-cache", o.no_cache, "Bypass the certificate cache");

  auto* identity = app.add_subcommand("identity", "Triangle identity for G and its complement");
  add_graph_input(identity, o);

  auto* kk = app.add_subcommand("kk-check", "Clique bound from edge counts against exhaustive maxima");
  kk->add_option("--t", o.t, "Clique order k (default: 3 and 4)");
  kk->add_option("--n", o.n, "Vertices of the exhaustive oracle (default 8)")->check(CLI::Range(1, 10));

  auto* ft = app.add_subcommand("ft", "f_t at a point, or its convexity on an integer grid");
  ft->add_option("--t", o.t, "Order t >= 3")->required();
  auto* x_opt = ft->add_option("--x", o.x, "Evaluate at this rational (p or p/q)");
  ft->add_option("--n", o.n, "Grid end for the convexity check (default 200)")->excludes(x_opt);

  auto* theorem = app.add_subcommand("verify-theorem", "Max i_t under a minimum degree, exhaustively");
  theorem->add_option("--n", o.n, "Vertices")->required();
  theorem->add_option("--delta", o.delta, "Minimum degree")->required();
  theorem->add_option("--t", o.t, "Independent set size")->required();
  theorem->add_option("--t-max", o.t_max, "Run every t up to this value");
  add_search_limits(theorem, o);

  auto* prop = app.add_subcommand("verify-prop", "Max k_t under a maximum degree on delta+1+b vertices");
  prop->add_option("--delta", o.delta, "Maximum degree")->required();
  prop->add_option("--b", o.b, "Size of the second clique")->required();
  prop->add_option("--t", o.t, "Clique order")->required();
  prop->add_option("--t-max", o.t_max, "Run every t up to this value");
  add_search_limits(prop, o);

  auto* open = app.add_subcommand("search-open", "Exhaustive search on a(delta+1)+b vertices");
  open->add_option("--a", o.a, "Copies of the big clique")->required();
  open->add_option("--delta", o.delta, "Maximum degree")->required();
  open->add_option("--b", o.b, "Size of the remainder clique")->required();
  open->add_option("--t", o.t, "Clique order")->required();
  add_search_limits(open, o);
  auto* resume = open->add_flag("--resume", o.resume, "Continue from the ledger (default)");
  open->add_flag("--fresh", o.fresh, "Discard the ledger and start over")->excludes(resume);
  open->add_option("--stop-after", o.stop_after, "Stop after this many new tasks")->group("");

  auto* smooth = app.add_subcommand("smooth-demo", "Run the smoothing procedure on one state");
  smooth->add_option("--delta", o.delta, "Maximum degree")->required();
  smooth->add_option("--b", o.b, "Second clique size")->required();
  smooth->add_option("--t", o.t, "Objective order")->required();
  smooth->add_option("--graph6", o.graph6, "Start from the triangle profile of this graph");
  smooth->add_option("--seed", o.seed, "Seed for a random start (default 1)");

  auto* enumerate = app.add_subcommand("enumerate", "One graph per isomorphism class");
  enumerate->add_option("--n", o.n, "Vertices")->required();
  auto* delta_opt = enumerate->add_option("--delta", o.delta, "Maximum degree at most");
  enumerate->add_option("--min-degree", o.min_degree, "Minimum degree at least")->excludes(delta_opt);
  enumerate->add_option("--edges", o.edges, "Exact edge count");
  enumerate->add_flag("--connected", o.connected, "Connected graphs only");
  enumerate->add_flag("--count-only", o.count_only, "Print only the number of classes");

  for (auto* sub : {count, identity, kk, ft, theorem, prop, open, smooth, enumerate}) {
    sub->add_option("--out", o.out, "Report file");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  const std::string started_at = timestamp_now();
  const std::string name = app.get_subcommands().front()->get_name();
  try {
    if (const std::filesystem::path target(o.out); target.has_parent_path()) {
      std::error_code ec;
      std::filesystem::create_directories(target.parent_path(), ec);
      if (ec) throw ReportIoError("cannot create " + target.parent_path().string() + ": " + ec.message());
    }
    std::vector<std::string> artifacts;
    Outcome result;
    if (name == "count") result = run_count(o, err);
    else if (name == "identity") result = run_identity(o);
    else if (name == "kk-check") result = run_kk_check(o);
    else if (name == "ft") result = run_ft(o);
    else if (name == "verify-theorem") result = run_verify_theorem(o);
    else if (name == "verify-prop") result = run_verify_prop(o);
    else if (name == "search-open") result = run_search_open(o, artifacts);
    else if (name == "smooth-demo") result = run_smooth_demo(o);
    else return run_enumerate(o, started_at, out);
    return finish(name, o, std::move(result), started_at, std::move(artifacts), out);
  } catch (const SearchInterrupted& e) {
    err << "interrupted: " << e.what() << "; rerun the same command to resume\n";
    return kExitIncomplete;
  } catch (const ReportIoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIncomplete;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n\n" << app.get_subcommands().front()->help();
    return kExitUsage;
  } catch (const EndpointLemmaViolation& e) {
    err << "claim violated: " << e.what() << '\n';
    return kExitClaimViolated;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitIncomplete;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"cliquemax"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace cliquemax::cli
