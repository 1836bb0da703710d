#pragma once

// Named graph families, generalized LCF notation and the conjoin (one shared
// cut vertex) composite.

#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hsgraph/graph.hpp"

namespace hsg {

inline Graph complete_graph(std::size_t m) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < m; ++i)
    for (Vertex j = i + 1; j < m; ++j) edges.emplace_back(i, j);
  return Graph::from_edges(m, std::move(edges));
}

inline Graph cycle_graph(std::size_t m) {
  if (m < 3) throw GraphError("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < m; ++i) edges.emplace_back(i, (i + 1) % m);
  return Graph::from_edges(m, std::move(edges));
}

inline Graph path_graph(std::size_t m) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < m; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_edges(m, std::move(edges));
}

/// K_{1,m}, center is vertex 0.
inline Graph star_graph(std::size_t m) {
  std::vector<Edge> edges;
  for (Vertex i = 1; i <= m; ++i) edges.emplace_back(0, i);
  return Graph::from_edges(m + 1, std::move(edges));
}

/// K_{a,b}; vertices 0..a-1 form the first side.
inline Graph complete_bipartite_graph(std::size_t a, std::size_t b) {
  if (a == 0 || b == 0) throw GraphError("complete_bipartite needs both sides non-empty");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < a; ++i)
    for (Vertex j = 0; j < b; ++j) edges.emplace_back(i, a + j);
  return Graph::from_edges(a + b, std::move(edges));
}

/// Q_d: vertices are d-bit words, edges join words at Hamming distance 1.
inline Graph hypercube_graph(std::size_t dim) {
  if (dim == 0 || dim > 20) throw GraphError("hypercube dimension must be in 1..20");
  const std::size_t n = std::size_t{1} << dim;
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v)
    for (std::size_t bit = 0; bit < dim; ++bit) {
      const Vertex w = v ^ (std::size_t{1} << bit);
      if (v < w) edges.emplace_back(v, w);
    }
  return Graph::from_edges(n, std::move(edges));
}

/// Kneser graph K(5,2): 2-subsets of {0..4}, adjacent when disjoint.
inline Graph petersen_graph() {
  std::vector<std::uint32_t> subsets;
  for (std::uint32_t i = 0; i < 5; ++i)
    for (std::uint32_t j = i + 1; j < 5; ++j) subsets.push_back((1u << i) | (1u << j));
  std::vector<Edge> edges;
  for (Vertex a = 0; a < subsets.size(); ++a)
    for (Vertex b = a + 1; b < subsets.size(); ++b)
      if ((subsets[a] & subsets[b]) == 0) edges.emplace_back(a, b);
  return Graph::from_edges(subsets.size(), std::move(edges));
}

/// Generalized LCF construction: Hamiltonian cycle 0..n-1 plus the chord
/// {i, i + offsets[i mod len]} for every i, n = len * repeat. Coinciding chords
/// collapse, so the chord relation need not be an involution.
inline Graph lcf_graph(std::span<const long long> offsets, std::size_t repeat) {
  if (offsets.empty() || repeat == 0) throw GraphError("lcf needs a non-empty offset list and repeat >= 1");
  const std::size_t n = offsets.size() * repeat;
  if (n < 3) throw GraphError("lcf needs at least 3 vertices");
  const auto sn = static_cast<long long>(n);

  std::set<Edge> cycle;
  for (Vertex i = 0; i < n; ++i) cycle.emplace(i, (i + 1) % n);
  std::set<Edge> chords;
  for (Vertex i = 0; i < n; ++i) {
    const long long off = offsets[i % offsets.size()];
    const auto j = static_cast<Vertex>(((static_cast<long long>(i) + off) % sn + sn) % sn);
    if (j == i) throw GraphError("lcf offset " + std::to_string(off) + " is a multiple of n");
    const Edge chord(i, j);
    if (cycle.contains(chord))
      throw GraphError("lcf chord " + std::to_string(chord.u) + "-" + std::to_string(chord.v) + " duplicates a cycle edge");
    chords.insert(chord);
  }
  std::vector<Edge> edges(cycle.begin(), cycle.end());
  edges.insert(edges.end(), chords.begin(), chords.end());
  return Graph::from_edges(n, std::move(edges));
}

inline Graph lcf_graph(std::initializer_list<long long> offsets, std::size_t repeat) {
  return lcf_graph(std::span<const long long>(offsets.begin(), offsets.size()), repeat);
}

/// 20 vertices, 40 edges, 4-regular; semisymmetric (edge- but not vertex-transitive).
inline Graph folkman_graph() { return lcf_graph({5, -7, -7, 5}, 5); }

/// alpha copies of `base` sharing the single vertex `glue`.
struct CompositeSpec {
  Graph base;
  std::size_t alpha = 1;
  Vertex glue = 0;
};

/// Builds the composite. The shared vertex becomes global 0; copy t maps base
/// vertex v != glue to t*(n-1) + rank(v) + 1 where rank skips the glue vertex.
inline Graph conjoin(const CompositeSpec& spec) {
  const std::size_t n = spec.base.order();
  if (spec.alpha < 1) throw GraphError("conjoin needs at least one copy");
  if (spec.glue >= n) throw GraphError("glue vertex " + std::to_string(spec.glue) + " out of range");

  auto global = [&](std::size_t copy, Vertex v) -> Vertex {
    if (v == spec.glue) return 0;
    const Vertex rank = v < spec.glue ? v : v - 1;
    return copy * (n - 1) + rank + 1;
  };
  std::vector<Edge> edges;
  edges.reserve(spec.alpha * spec.base.size());
  for (std::size_t t = 0; t < spec.alpha; ++t)
    for (const Edge& e : spec.base.edges()) edges.emplace_back(global(t, e.u), global(t, e.v));
  return Graph::from_edges(spec.alpha * (n - 1) + 1, std::move(edges));
}

/// W(eta, k): eta copies of K_{k+1} sharing one vertex.
inline Graph windmill_graph(std::size_t eta, std::size_t k) {
  if (eta < 1 || k < 1) throw GraphError("windmill needs eta >= 1 and k >= 1");
  return conjoin({complete_graph(k + 1), eta, 0});
}

/// Named family dispatcher used by the CLI and the verification corpus.
///
/// Families and parameters: complete m (m>=2), cycle m (m>=3), path m (m>=2),
/// star m (m>=1), complete_bipartite a b, hypercube d, petersen, folkman,
/// windmill eta k.
inline Graph generate(std::string_view family, std::span<const long long> params) {
  auto expect = [&](std::size_t count) {
    if (params.size() != count)
      throw GraphError(std::string(family) + " takes " + std::to_string(count) + " parameter(s), got " +
                       std::to_string(params.size()));
  };
  auto at_least = [&](std::size_t idx, long long lo) -> std::size_t {
    if (params[idx] < lo)
      throw GraphError(std::string(family) + " parameter " + std::to_string(idx + 1) + " must be >= " +
                       std::to_string(lo));
    return static_cast<std::size_t>(params[idx]);
  };

  if (family == "complete") {
    expect(1);
    return complete_graph(at_least(0, 2));
  }
  if (family == "cycle") {
    expect(1);
    return cycle_graph(at_least(0, 3));
  }
  if (family == "path") {
    expect(1);
    return path_graph(at_least(0, 2));
  }
  if (family == "star") {
    expect(1);
    return star_graph(at_least(0, 1));
  }
  if (family == "complete_bipartite") {
    expect(2);
    return complete_bipartite_graph(at_least(0, 1), at_least(1, 1));
  }
  if (family == "hypercube") {
    expect(1);
    return hypercube_graph(at_least(0, 1));
  }
  if (family == "petersen") {
    expect(0);
    return petersen_graph();
  }
  if (family == "folkman") {
    expect(0);
    return folkman_graph();
  }
  if (family == "windmill") {
    expect(2);
    return windmill_graph(at_least(0, 1), at_least(1, 1));
  }
  throw GraphError("unknown graph family '" + std::string(family) + "'");
}

inline Graph generate(std::string_view family, std::initializer_list<long long> params = {}) {
  return generate(family, std::span<const long long>(params.begin(), params.size()));
}

/// "family(p1,p2)" label.
inline std::string family_label(std::string_view family, std::span<const long long> params) {
  std::string s(family);
  s += "(";
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(params[i]);
  }
  return s + ")";
}

}  // namespace hsg
