#pragma once

// Automorphism enumeration, orbit partitions and the symmetry classification
// ladder (regular, walk-regular, distance-regular, vertex-/edge-transitive, HS).

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hsgraph/graph.hpp"
#include "hsgraph/walks.hpp"

namespace hsg {

constexpr std::size_t kDefaultAutomorphismCap = 1'000'000;
constexpr std::size_t kMaxAutomorphismOrder = 64;

class AutomorphismCapExceeded : public std::runtime_error {
 public:
  explicit AutomorphismCapExceeded(std::size_t cap)
      : std::runtime_error("automorphism group has more than " + std::to_string(cap) + " elements"), cap_(cap) {}
  std::size_t cap() const { return cap_; }

 private:
  std::size_t cap_;
};

/// Raised when classification flags contradict the implication chain.
class ClassificationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct Permutation {
  std::vector<Vertex> image;

  Vertex operator()(Vertex v) const { return image[v]; }
  std::size_t size() const { return image.size(); }

  static Permutation identity(std::size_t n) {
    Permutation p;
    p.image.resize(n);
    std::iota(p.image.begin(), p.image.end(), Vertex{0});
    return p;
  }
  Permutation then(const Permutation& next) const {
    Permutation p;
    p.image.resize(size());
    for (Vertex v = 0; v < size(); ++v) p.image[v] = next(image[v]);
    return p;
  }
  Permutation inverse() const {
    Permutation p;
    p.image.resize(size());
    for (Vertex v = 0; v < size(); ++v) p.image[image[v]] = v;
    return p;
  }
  friend auto operator<=>(const Permutation&, const Permutation&) = default;
};

/// True when `image` is a bijection mapping every edge onto an edge.
inline bool is_automorphism(const Graph& g, std::span<const Vertex> image) {
  if (image.size() != g.order()) return false;
  std::vector<char> hit(g.order(), 0);
  for (Vertex v : image) {
    if (v >= g.order() || hit[v]) return false;
    hit[v] = 1;
  }
  for (const Edge& e : g.edges())
    if (!g.has_edge(image[e.u], image[e.v])) return false;
  return true;
}

namespace detail {

inline std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Backtracking search over vertex images. Both sides of the search carry a
// vertex coloring refined by the same label-independent procedure, so an
// automorphism mapping the left individualizations onto the right ones maps
// left colors onto identical right colors. Branches whose color-class sizes
// disagree are pruned; discrete leaves are verified edge by edge.
class AutomorphismSearch {
 public:
  explicit AutomorphismSearch(const Graph& g) : g_(g), n_(g.order()), adj_(n_ * n_, 0) {
    for (const Edge& e : g.edges()) {
      adj_[e.u * n_ + e.v] = 1;
      adj_[e.v * n_ + e.u] = 1;
    }
    keys_.resize(n_);
    image_.resize(n_);
  }

  template <class Visit>
  std::size_t run(Visit&& visit, std::size_t cap) {
    count_ = 0;
    cap_ = cap;
    left_.assign(n_ + 1, Coloring{std::vector<std::uint32_t>(n_, 0), 1});
    right_.assign(n_ + 1, Coloring{std::vector<std::uint32_t>(n_, 0), 1});
    sizes_.assign(n_ + 1, std::vector<std::uint32_t>(n_ + 1, 0));
    scratch_.assign(n_ + 1, 0);
    refine(left_[0]);
    right_[0] = left_[0];
    search(0, visit);
    return count_;
  }

 private:
  struct Coloring {
    std::vector<std::uint32_t> color;
    std::uint32_t cells = 0;
  };

  // Splits cells by the multiset of neighbor colors until stable. New color
  // names are ranks of (old color, neighborhood hash), so equal inputs up to
  // relabeling give equal outputs up to the same relabeling.
  void refine(Coloring& c) {
    for (;;) {
      for (Vertex v = 0; v < n_; ++v) {
        std::uint64_t h = 0;
        for (Vertex u : g_.neighbors(v)) h += splitmix(c.color[u]);
        keys_[v] = {c.color[v], h, v};
      }
      std::sort(keys_.begin(), keys_.end(), [](const Key& a, const Key& b) {
        return a.color != b.color ? a.color < b.color : a.hash < b.hash;
      });
      std::uint32_t next = 0;
      for (std::size_t i = 0; i < n_; ++i) {
        if (i > 0 && (keys_[i].color != keys_[i - 1].color || keys_[i].hash != keys_[i - 1].hash)) ++next;
        c.color[keys_[i].vertex] = next;
      }
      const std::uint32_t cells = next + 1;
      const bool stable = cells == c.cells;
      c.cells = cells;
      if (stable) return;
    }
  }

  static void individualize(const Coloring& c, Vertex v, Coloring& out) {
    out.cells = c.cells + 1;
    const std::uint32_t target = c.color[v];
    for (std::size_t x = 0; x < c.color.size(); ++x) {
      const std::uint32_t col = c.color[x];
      out.color[x] = col > target || (col == target && x != v) ? col + 1 : col;
    }
  }

  static void histogram(const Coloring& c, std::vector<std::uint32_t>& h) {
    std::fill(h.begin(), h.begin() + c.cells, 0);
    for (auto col : c.color) ++h[col];
  }

  bool same_histogram(const Coloring& c, const std::vector<std::uint32_t>& wanted) {
    histogram(c, scratch_);
    return std::equal(scratch_.begin(), scratch_.begin() + c.cells, wanted.begin());
  }

  template <class Visit>
  void search(std::size_t depth, Visit& visit) {
    const Coloring& left = left_[depth];
    const Coloring& right = right_[depth];
    if (left.cells == n_) {
      for (Vertex v = 0; v < n_; ++v) slot_[left.color[v]] = v;
      for (Vertex w = 0; w < n_; ++w) image_[slot_[right.color[w]]] = w;
      for (const Edge& e : g_.edges())
        if (!adj_[image_[e.u] * n_ + image_[e.v]]) return;
      if (++count_ > cap_) throw AutomorphismCapExceeded(cap_);
      visit(std::span<const Vertex>(image_));
      return;
    }

    auto& sizes = sizes_[depth];
    histogram(left, sizes);
    std::uint32_t target = 0;
    while (sizes[target] == 1) ++target;
    Vertex pivot = 0;
    while (left.color[pivot] != target) ++pivot;

    Coloring& left_child = left_[depth + 1];
    individualize(left, pivot, left_child);
    refine(left_child);
    histogram(left_child, sizes);

    Coloring& right_child = right_[depth + 1];
    for (Vertex w = 0; w < n_; ++w) {
      if (right.color[w] != target) continue;
      individualize(right, w, right_child);
      refine(right_child);
      if (right_child.cells != left_child.cells || !same_histogram(right_child, sizes)) continue;
      search(depth + 1, visit);
    }
  }

  struct Key {
    std::uint32_t color;
    std::uint64_t hash;
    Vertex vertex;
  };

  const Graph& g_;
  std::size_t n_;
  std::vector<char> adj_;
  std::vector<Key> keys_;
  std::vector<Vertex> image_;
  std::vector<Vertex> slot_ = std::vector<Vertex>(n_);
  std::vector<Coloring> left_, right_;
  std::vector<std::vector<std::uint32_t>> sizes_;
  std::vector<std::uint32_t> scratch_;
  std::size_t count_ = 0;
  std::size_t cap_ = 0;
};

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace detail

/// Streams every automorphism of g to `visit(std::span<const Vertex>)` in a
/// deterministic order, the identity first. Returns the group order. Throws
/// AutomorphismCapExceeded once more than `cap` automorphisms are found.
template <class Visit>
std::size_t for_each_automorphism(const Graph& g, Visit&& visit, std::size_t cap = kDefaultAutomorphismCap) {
  detail::AutomorphismSearch search(g);
  return search.run(visit, cap);
}

inline std::vector<Permutation> automorphisms(const Graph& g, std::size_t cap = kDefaultAutomorphismCap) {
  std::vector<Permutation> out;
  for_each_automorphism(
      g, [&](std::span<const Vertex> image) { out.push_back(Permutation{{image.begin(), image.end()}}); }, cap);
  return out;
}

/// Vertex classes (each sorted, ordered by smallest member) and edge classes.
struct OrbitPartition {
  std::vector<std::vector<Vertex>> classes;
  std::vector<std::size_t> class_of;
  std::vector<std::vector<Edge>> edge_classes;
  std::size_t automorphism_count = 0;

  std::size_t size() const { return classes.size(); }
};

namespace detail {

// Accumulates vertex and edge orbits from a stream of automorphisms.
class OrbitCollector {
 public:
  explicit OrbitCollector(const Graph& g)
      : g_(g), vertices_(g.order()), edges_(g.size()), edge_id_(g.order() * g.order(), 0) {
    for (std::size_t i = 0; i < g.size(); ++i) {
      const Edge& e = g.edges()[i];
      edge_id_[e.u * g.order() + e.v] = i;
      edge_id_[e.v * g.order() + e.u] = i;
    }
  }

  void add(std::span<const Vertex> image) {
    for (Vertex v = 0; v < image.size(); ++v) vertices_.unite(v, image[v]);
    for (std::size_t i = 0; i < g_.size(); ++i) {
      const Edge& e = g_.edges()[i];
      edges_.unite(i, edge_id_[image[e.u] * g_.order() + image[e.v]]);
    }
  }

  OrbitPartition finish(std::size_t count) {
    OrbitPartition p;
    p.automorphism_count = count;
    p.class_of.assign(g_.order(), 0);
    std::vector<std::size_t> slot(g_.order(), SIZE_MAX);
    for (Vertex v = 0; v < g_.order(); ++v) {
      const std::size_t root = vertices_.find(v);
      if (slot[root] == SIZE_MAX) {
        slot[root] = p.classes.size();
        p.classes.emplace_back();
      }
      p.class_of[v] = slot[root];
      p.classes[slot[root]].push_back(v);
    }
    std::vector<std::size_t> eslot(g_.size(), SIZE_MAX);
    for (std::size_t i = 0; i < g_.size(); ++i) {
      const std::size_t root = edges_.find(i);
      if (eslot[root] == SIZE_MAX) {
        eslot[root] = p.edge_classes.size();
        p.edge_classes.emplace_back();
      }
      p.edge_classes[eslot[root]].push_back(g_.edges()[i]);
    }
    return p;
  }

 private:
  const Graph& g_;
  UnionFind vertices_;
  UnionFind edges_;
  std::vector<std::size_t> edge_id_;
};

}  // namespace detail

/// Orbits of the full automorphism group on vertices and on edges.
inline OrbitPartition vertex_orbits(const Graph& g, std::size_t cap = kDefaultAutomorphismCap) {
  detail::OrbitCollector collector(g);
  const std::size_t count = for_each_automorphism(g, [&](std::span<const Vertex> image) { collector.add(image); }, cap);
  return collector.finish(count);
}

/// Checks that diag(A^k) is constant for k = 2..n-1 in exact integers. Higher
/// powers add nothing: by Cayley-Hamilton A^n is an integer combination of
/// I, A, ..., A^{n-1}, so its diagonal is constant once all lower ones are.
inline bool is_walk_regular(const Graph& g) {
  using boost::multiprecision::cpp_int;
  const std::size_t n = g.order();
  // walks[i*n + j] = number of walks of the current length from i to j
  std::vector<cpp_int> walks(n * n), next(n * n);
  for (const Edge& e : g.edges()) {
    walks[e.u * n + e.v] = 1;
    walks[e.v * n + e.u] = 1;
  }
  for (std::size_t k = 2; k < n; ++k) {
    for (Vertex i = 0; i < n; ++i)
      for (Vertex j = 0; j < n; ++j) {
        cpp_int sum = 0;
        for (Vertex u : g.neighbors(j)) sum += walks[i * n + u];
        next[i * n + j] = std::move(sum);
      }
    walks.swap(next);
    for (Vertex i = 1; i < n; ++i)
      if (walks[i * n + i] != walks[0]) return false;
  }
  return true;
}

struct IntersectionArray {
  std::size_t diameter = 0;
  std::vector<std::size_t> b;  ///< b_0 .. b_{D-1}
  std::vector<std::size_t> c;  ///< c_1 .. c_D
};

struct DistanceRegularity {
  bool distance_regular = false;
  std::optional<IntersectionArray> array;
};

/// Counts, for every ordered pair (u, v) at distance j, the neighbors of u at
/// distance j-1 and j+1 from v, and requires the counts to depend on j alone.
inline DistanceRegularity is_distance_regular(const Graph& g) {
  const auto degree = g.regular_degree();
  if (!degree) return {};
  const DistanceMatrix dist(g);
  const std::size_t diameter = dist.diameter();
  constexpr std::size_t unset = SIZE_MAX;
  std::vector<std::size_t> b(diameter + 1, unset), c(diameter + 1, unset);
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = 0; v < g.order(); ++v) {
      const std::size_t j = dist(u, v);
      std::size_t closer = 0, farther = 0;
      for (Vertex w : g.neighbors(u)) {
        const std::size_t dw = dist(w, v);
        if (dw + 1 == j) ++closer;
        if (dw == j + 1) ++farther;
      }
      if (j < diameter) {
        if (b[j] == unset) b[j] = farther;
        else if (b[j] != farther) return {};
      }
      if (j >= 1) {
        if (c[j] == unset) c[j] = closer;
        else if (c[j] != closer) return {};
      }
    }
  IntersectionArray array;
  array.diameter = diameter;
  array.b.assign(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(diameter));
  array.c.assign(c.begin() + 1, c.end());
  return {true, std::move(array)};
}

/// max |H_ij - H_ji| relative to the largest hitting time.
inline double relative_hitting_asymmetry(const Eigen::MatrixXd& h) {
  const double scale = h.maxCoeff();
  return hitting_asymmetry(h).cwiseAbs().maxCoeff() / scale;
}

inline bool is_hs(const Graph& g, double tol = 1e-9) {
  return relative_hitting_asymmetry(hitting_times_solve(g)) <= tol;
}

struct SymmetryReport {
  bool regular = false;
  bool walk_regular = false;
  bool distance_regular = false;
  std::optional<bool> vertex_transitive;  ///< empty when not computed
  std::optional<bool> edge_transitive;
  bool hs = false;
  std::optional<std::size_t> automorphism_count;
  std::optional<OrbitPartition> orbits;
  std::optional<IntersectionArray> intersection_array;
  double max_hitting_asymmetry = 0;  ///< max |Delta_ij|, in steps
  bool automorphism_cap_exceeded = false;
  std::string not_computed_reason;
};

struct ClassifyOptions {
  double tolerance = 1e-9;
  std::size_t automorphism_cap = kDefaultAutomorphismCap;
  std::size_t max_automorphism_order = kMaxAutomorphismOrder;
};

inline SymmetryReport classify(const Graph& g, const ClassifyOptions& opt = {}) {
  SymmetryReport r;
  r.regular = g.is_regular();
  r.walk_regular = is_walk_regular(g);
  auto drg = is_distance_regular(g);
  r.distance_regular = drg.distance_regular;
  r.intersection_array = std::move(drg.array);

  const Eigen::MatrixXd h = hitting_times_solve(g);
  r.max_hitting_asymmetry = hitting_asymmetry(h).cwiseAbs().maxCoeff();
  r.hs = r.max_hitting_asymmetry <= opt.tolerance * h.maxCoeff();

  if (g.order() > opt.max_automorphism_order) {
    r.not_computed_reason = "automorphism search skipped for n > " + std::to_string(opt.max_automorphism_order);
  } else {
    try {
      r.orbits = vertex_orbits(g, opt.automorphism_cap);
      r.automorphism_count = r.orbits->automorphism_count;
      r.vertex_transitive = r.orbits->size() == 1;
      r.edge_transitive = r.orbits->edge_classes.size() == 1;
    } catch (const AutomorphismCapExceeded& e) {
      r.automorphism_cap_exceeded = true;
      r.not_computed_reason = e.what();
    }
  }

  if (r.distance_regular && !r.walk_regular) throw ClassificationError("distance-regular graph failed walk-regularity");
  if (r.walk_regular && !r.regular) throw ClassificationError("walk-regular graph is not regular");
  if (r.vertex_transitive.value_or(false) && !r.hs)
    throw ClassificationError("vertex-transitive graph has asymmetric hitting times");
  if (r.edge_transitive.value_or(false) && r.regular && !r.hs)
    throw ClassificationError("regular edge-transitive graph has asymmetric hitting times");
  return r;
}

}  // namespace hsg
