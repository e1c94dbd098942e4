#include "cliquemax/canonical.hpp"

#include <bit>
#include <numeric>
#include <vector>

#include "cliquemax/graph6.hpp"

namespace cliquemax {

namespace {

constexpr int kNoJump = 1 << 20;
using Perm = std::array<std::uint8_t, kMaxCanonicalOrder>;
using Rows = std::array<std::uint64_t, kMaxCanonicalOrder>;

// Ordered partition of the vertex set; cells are vertex masks.
struct Partition {
  std::array<std::uint64_t, kMaxCanonicalOrder> cells{};
  int count = 0;
};

struct UnionFind {
  std::array<std::uint8_t, kMaxCanonicalOrder> parent{};

  explicit UnionFind(int n) {
    for (int i = 0; i < n; ++i) parent[i] = static_cast<std::uint8_t>(i);
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b) parent[b] = static_cast<std::uint8_t>(a);
    else parent[a] = static_cast<std::uint8_t>(b);
  }
};

class Canonizer {
 public:
  explicit Canonizer(const Graph& g) : n_(g.order()) {
    for (int v = 0; v < n_; ++v) adj_[v] = g.row_unchecked(v);
  }

  CanonicalLabeling run() {
    Partition root;
    root.cells[0] = VertexSet::first(n_).bits();
    root.count = 1;
    std::uint64_t queue[64];
    queue[0] = root.cells[0];
    refine(root, queue, 1);
    search(root, 0);

    CanonicalLabeling out;
    std::array<std::uint64_t, kMaxVertices> rows{};
    for (int i = 0; i < n_; ++i) {
      out.position[best_lab_[i]] = static_cast<std::uint8_t>(i);
      rows[i] = best_rows_[i];
    }
    out.canonical = Graph::from_rows(std::span(rows).first(n_));
    UnionFind orbits(n_);
    for (const Perm& gamma : gens_) {
      for (int v = 0; v < n_; ++v) orbits.unite(v, gamma[v]);
    }
    for (int v = 0; v < n_; ++v) out.orbit[v] = static_cast<std::uint8_t>(orbits.find(v));
    out.generators = static_cast<int>(gens_.size());
    return out;
  }

 private:
  void refine(Partition& p, std::uint64_t* queue, int tail) const {
    int head = 0;
    while (head < tail && p.count < n_) {
      const std::uint64_t splitter = queue[head++];
      for (int i = 0; i < p.count; ++i) {
        const std::uint64_t cell = p.cells[i];
        if ((cell & (cell - 1)) == 0) continue;
        std::array<std::uint64_t, kMaxCanonicalOrder + 1> buckets{};
        std::uint32_t present = 0;
        for (std::uint64_t rest = cell; rest != 0; rest &= rest - 1) {
          const int x = std::countr_zero(rest);
          const int c = std::popcount(adj_[x] & splitter);
          buckets[c] |= std::uint64_t{1} << x;
          present |= 1U << c;
        }
        const int parts = std::popcount(present);
        if (parts == 1) continue;
        for (int j = p.count - 1; j > i; --j) p.cells[j + parts - 1] = p.cells[j];
        int k = i;
        for (std::uint32_t rest = present; rest != 0; rest &= rest - 1) {
          const std::uint64_t part = buckets[std::countr_zero(rest)];
          p.cells[k++] = part;
          queue[tail++] = part;
        }
        p.count += parts - 1;
        i += parts - 1;
      }
    }
  }

  // Generators fixing path_[0..level) pointwise act on the children of the
  // current node; a child in the orbit of an explored one is redundant.
  bool redundant(int v, std::uint64_t explored, int level) const {
    UnionFind uf(n_);
    bool any = false;
    for (const Perm& gamma : gens_) {
      bool fixes = true;
      for (int i = 0; i < level && fixes; ++i) fixes = gamma[path_[i]] == path_[i];
      if (!fixes) continue;
      any = true;
      for (int x = 0; x < n_; ++x) uf.unite(x, gamma[x]);
    }
    if (!any) return false;
    const int root = uf.find(v);
    for (std::uint64_t rest = explored; rest != 0; rest &= rest - 1) {
      if (uf.find(std::countr_zero(rest)) == root) return true;
    }
    return false;
  }

  int search(const Partition& p, int level) {
    if (p.count == n_) return leaf(p, level);
    int target = 0;
    while ((p.cells[target] & (p.cells[target] - 1)) == 0) ++target;
    std::uint64_t explored = 0;
    for (std::uint64_t rest = p.cells[target]; rest != 0; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      if (explored != 0 && redundant(v, explored, level)) continue;
      explored |= std::uint64_t{1} << v;

      Partition child = p;
      const std::uint64_t single = std::uint64_t{1} << v;
      for (int j = child.count - 1; j > target; --j) child.cells[j + 1] = child.cells[j];
      child.cells[target] = single;
      child.cells[target + 1] = p.cells[target] & ~single;
      ++child.count;
      std::uint64_t queue[64];
      queue[0] = single;
      refine(child, queue, 1);

      path_[level] = static_cast<std::uint8_t>(v);
      const int jump = search(child, level + 1);
      if (jump < level) return jump;
    }
    return kNoJump;
  }

  int leaf(const Partition& p, int level) {
    Perm lab{};
    Perm pos{};
    for (int i = 0; i < n_; ++i) {
      lab[i] = static_cast<std::uint8_t>(std::countr_zero(p.cells[i]));
      pos[lab[i]] = static_cast<std::uint8_t>(i);
    }
    Rows rows{};
    for (int i = 0; i < n_; ++i) {
      for (std::uint64_t rest = adj_[lab[i]]; rest != 0; rest &= rest - 1) {
        rows[i] |= std::uint64_t{1} << pos[std::countr_zero(rest)];
      }
    }
    if (!have_leaf_) {
      have_leaf_ = true;
      first_rows_ = best_rows_ = rows;
      first_lab_ = best_lab_ = lab;
      first_path_ = best_path_ = path_;
      return kNoJump;
    }
    if (rows == first_rows_) {
      add_generator(first_lab_, lab);
      return common_prefix(first_path_, level);
    }
    if (rows == best_rows_) {
      add_generator(best_lab_, lab);
      return common_prefix(best_path_, level);
    }
    if (rows > best_rows_) {
      best_rows_ = rows;
      best_lab_ = lab;
      best_path_ = path_;
    }
    return kNoJump;
  }

  // Maps from[i] -> to[i].
  void add_generator(const Perm& from, const Perm& to) {
    Perm gamma{};
    for (int i = 0; i < n_; ++i) gamma[from[i]] = to[i];
    gens_.push_back(gamma);
  }

  int common_prefix(const Perm& other, int level) const {
    int i = 0;
    while (i < level && other[i] == path_[i]) ++i;
    return i;
  }

  int n_;
  std::array<std::uint64_t, kMaxCanonicalOrder> adj_{};
  Perm path_{};
  bool have_leaf_ = false;
  Rows first_rows_{};
  Rows best_rows_{};
  Perm first_lab_{};
  Perm best_lab_{};
  Perm first_path_{};
  Perm best_path_{};
  std::vector<Perm> gens_;
};

}  // namespace

CanonicalLabeling canonical_labeling(const Graph& g) {
  if (g.order() > kMaxCanonicalOrder) {
    throw GraphError("canonical labeling supports at most 16 vertices");
  }
  if (g.order() == 0) return CanonicalLabeling{};
  return Canonizer(g).run();
}

CanonicalForm canonical_form(const Graph& g) {
  return CanonicalForm{graph6_encode(canonical_labeling(g).canonical)};
}

bool isomorphic(const Graph& g, const Graph& h) {
  return g.order() == h.order() && g.edge_count() == h.edge_count() &&
         canonical_form(g) == canonical_form(h);
}

}  // namespace cliquemax
