#include "cliquemax/kk_bounds.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

#include "cliquemax/counting.hpp"
#include "cliquemax/enumerate.hpp"

namespace cliquemax {

FtBound f_t(const BigRational& x, int t) {
  if (t < 3) throw std::invalid_argument("f_t needs t >= 3");
  if (x < 0) throw std::invalid_argument("f_t needs x >= 0");
  FtBound bound;
  bound.t = t;
  bound.x = x;
  const QuadraticNumber u = u_of(x);
  if (compare(u, QuadraticNumber(t - 2)) == std::strong_ordering::less) {
    bound.branch = FtBranch::zero;
    bound.value = QuadraticNumber(0);
  } else {
    bound.branch = FtBranch::kk;
    bound.value = gen_binomial(u, t - 1);
  }
  return bound;
}

double f_t_derivative(double x, int t) {
  if (t < 3) throw std::invalid_argument("f_t needs t >= 3");
  const double root = std::sqrt(1.0 + 8.0 * x);
  const double u = (1.0 + root) / 2.0;
  if (u < t - 2) return 0.0;
  // d/du C(u, t-1) is a sum of t-1 products, each omitting one factor.
  double sum = 0.0;
  for (int skip = 0; skip < t - 1; ++skip) {
    double product = 1.0;
    for (int i = 0; i < t - 1; ++i) {
      if (i != skip) product *= u - i;
    }
    sum += product;
  }
  double factorial = 1.0;
  for (int i = 2; i <= t - 1; ++i) factorial *= i;
  return (2.0 / root) * sum / factorial;
}

QuadraticNumber kk_clique_bound(long long m, int k) {
  if (k < 3) throw std::invalid_argument("kk_clique_bound needs k >= 3");
  if (m < 0) throw std::invalid_argument("kk_clique_bound needs m >= 0");
  const QuadraticNumber u = u_of(BigRational(m));
  if (compare(u, QuadraticNumber(k - 1)) == std::strong_ordering::less) return QuadraticNumber(0);
  return gen_binomial(u, k);
}

std::vector<BigInt> kk_oracle_table(int k, int n_max) {
  if (n_max < 1 || n_max > 10) throw std::invalid_argument("kk_oracle needs 1 <= n_max <= 10");
  if (k < 0) throw std::invalid_argument("negative clique order");
  // Graphs on fewer vertices appear here padded with isolated vertices.
  std::vector<BigInt> best(n_max * (n_max - 1) / 2 + 1, BigInt(0));
  enumerate_graphs(EnumerationConfig::all_graphs(n_max), [&](const Graph& g) {
    BigInt value = count_cliques(g, k);
    BigInt& slot = best[g.edge_count()];
    if (value > slot) slot = std::move(value);
  });
  return best;
}

BigInt kk_oracle(long long m, int k, int n_max) {
  if (n_max < 1 || n_max > 10) throw std::invalid_argument("kk_oracle needs 1 <= n_max <= 10");
  if (m < 0 || m > static_cast<long long>(n_max) * (n_max - 1) / 2) {
    throw std::invalid_argument("no graph with that many edges fits in n_max vertices");
  }
  EnumerationConfig config = EnumerationConfig::all_graphs(n_max);
  config.edge_count = static_cast<int>(m);
  BigInt best = 0;
  enumerate_graphs(config, [&](const Graph& g) {
    BigInt value = count_cliques(g, k);
    if (value > best) best = std::move(value);
  });
  return best;
}

ConvexityReport f_t_convexity_check(int t, std::span<const BigRational> grid) {
  if (t < 3) throw std::invalid_argument("convexity check needs t >= 3");
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i - 1] < grid[i])) throw std::invalid_argument("grid must be strictly ascending");
  }
  ConvexityReport report;
  report.t = t;
  const BigRational flat_end(binomial(t - 2, 2));
  std::vector<QuadraticNumber> values;
  values.reserve(grid.size());
  for (const BigRational& x : grid) values.push_back(f_t(x, t).value);

  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    ++report.pairs;
    const auto step = compare(values[i + 1], values[i]);
    if (step == std::strong_ordering::less) {
      report.monotone = false;
      report.strictly_increasing = false;
      report.violations.push_back(grid[i]);
    } else if (step == std::strong_ordering::equal && grid[i + 1] > flat_end) {
      report.strictly_increasing = false;
    }
  }
  for (std::size_t i = 1; i + 1 < grid.size(); ++i) {
    ++report.triples;
    const BigRational& x0 = grid[i - 1];
    const BigRational& x1 = grid[i];
    const BigRational& x2 = grid[i + 1];
    // (x1 - x0) f(x2) - (x2 - x0) f(x1) + (x2 - x1) f(x0)
    SurdSum second;
    second.add(values[i + 1], x1 - x0);
    second.add(values[i], -(x2 - x0));
    second.add(values[i - 1], x2 - x1);
    const int sign = second.sign();
    if (sign < 0) {
      report.convex = false;
      report.strictly_convex = false;
      report.violations.push_back(x1);
    } else if (sign == 0) {
      report.flat_points.push_back(x1);
      if (x1 > flat_end) report.strictly_convex = false;
    }
  }
  return report;
}

bool vertex_clique_bound_check(const Graph& g, int t) {
  if (t < 3) throw std::invalid_argument("vertex bound needs t >= 3");
  const CliqueProfile kt = clique_profile(g, t);
  const CliqueProfile k3 = t == 3 ? kt : clique_profile(g, 3);
  std::map<BigInt, QuadraticNumber> bounds;
  for (int v = 0; v < g.order(); ++v) {
    auto it = bounds.find(k3.per_vertex[v]);
    if (it == bounds.end()) {
      it = bounds.emplace(k3.per_vertex[v], f_t(BigRational(k3.per_vertex[v]), t).value).first;
    }
    if (compare(QuadraticNumber(BigRational(kt.per_vertex[v])), it->second) ==
        std::strong_ordering::greater) {
      return false;
    }
  }
  return true;
}

}  // namespace cliquemax
