#pragma once

// Simple connected undirected graphs: representation, validation, edge-list I/O
// and BFS distances.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hsg {

using Vertex = std::size_t;

/// Unordered edge stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Raised for malformed input or graphs violating the simple/connected contract.
class GraphError : public std::runtime_error {
 public:
  explicit GraphError(const std::string& what, std::optional<std::size_t> line = std::nullopt)
      : std::runtime_error(line ? "line " + std::to_string(*line) + ": " + what : what), line_(line) {}

  std::optional<std::size_t> line() const { return line_; }

 private:
  std::optional<std::size_t> line_;
};

/// Immutable finite simple connected graph on vertices 0..n-1.
///
/// Every constructed instance satisfies: no loops, no duplicate edges, n >= 2,
/// one connected component, adjacency lists sorted and consistent with the
/// edge set.
class Graph {
 public:
  /// Validates and builds. Throws GraphError on any contract violation.
  static Graph from_edges(std::size_t n, std::vector<Edge> edges) {
    if (n < 2) throw GraphError("graph needs at least 2 vertices (got " + std::to_string(n) + ")");
    Graph g;
    g.adj_.assign(n, {});
    for (const Edge& e : edges) {
      if (e.u == e.v) throw GraphError("self-loop at vertex " + std::to_string(e.u));
      if (e.v >= n) throw GraphError("vertex " + std::to_string(e.v) + " out of range for n=" + std::to_string(n));
    }
    std::sort(edges.begin(), edges.end());
    if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end())
      throw GraphError("duplicate edge " + std::to_string(dup->u) + " " + std::to_string(dup->v));
    for (const Edge& e : edges) {
      g.adj_[e.u].push_back(e.v);
      g.adj_[e.v].push_back(e.u);
    }
    for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
    g.edges_ = std::move(edges);
    if (!g.connected()) throw GraphError("graph is disconnected");
    return g;
  }

  std::size_t order() const { return adj_.size(); }
  std::size_t size() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  std::size_t degree(Vertex v) const { return adj_[v].size(); }

  std::vector<std::size_t> degrees() const {
    std::vector<std::size_t> d(order());
    for (Vertex v = 0; v < order(); ++v) d[v] = degree(v);
    return d;
  }

  bool has_edge(Vertex a, Vertex b) const {
    if (a >= order() || b >= order()) return false;
    return std::binary_search(adj_[a].begin(), adj_[a].end(), b);
  }

  /// Common degree when regular.
  std::optional<std::size_t> regular_degree() const {
    const std::size_t d = degree(0);
    for (Vertex v = 1; v < order(); ++v)
      if (degree(v) != d) return std::nullopt;
    return d;
  }
  bool is_regular() const { return regular_degree().has_value(); }

  bool is_bipartite() const {
    std::vector<int> side(order(), -1);
    side[0] = 0;
    std::queue<Vertex> q;
    q.push(0);
    while (!q.empty()) {
      const Vertex u = q.front();
      q.pop();
      for (Vertex w : adj_[u]) {
        if (side[w] < 0) {
          side[w] = 1 - side[u];
          q.push(w);
        } else if (side[w] == side[u]) {
          return false;
        }
      }
    }
    return true;
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_.size() == b.adj_.size() && a.edges_ == b.edges_; }

 private:
  Graph() = default;

  bool connected() const {
    std::vector<char> seen(order(), 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : adj_[u])
        if (!seen[w]) {
          seen[w] = 1;
          ++reached;
          stack.push_back(w);
        }
    }
    return reached == order();
  }

  std::vector<std::vector<Vertex>> adj_;
  std::vector<Edge> edges_;
};

/// Row-major n x n matrix of BFS hop distances.
class DistanceMatrix {
 public:
  explicit DistanceMatrix(const Graph& g) : n_(g.order()), d_(n_ * n_, 0) {
    std::vector<Vertex> queue(n_);
    std::vector<char> seen(n_);
    for (Vertex s = 0; s < n_; ++s) {
      std::fill(seen.begin(), seen.end(), 0);
      std::size_t head = 0, tail = 0;
      queue[tail++] = s;
      seen[s] = 1;
      while (head < tail) {
        const Vertex u = queue[head++];
        for (Vertex w : g.neighbors(u))
          if (!seen[w]) {
            seen[w] = 1;
            d_[s * n_ + w] = d_[s * n_ + u] + 1;
            queue[tail++] = w;
          }
      }
    }
  }

  std::size_t operator()(Vertex a, Vertex b) const { return d_[a * n_ + b]; }
  std::size_t order() const { return n_; }
  std::size_t diameter() const { return *std::max_element(d_.begin(), d_.end()); }

 private:
  std::size_t n_;
  std::vector<std::size_t> d_;
};

inline DistanceMatrix distance_matrix(const Graph& g) { return DistanceMatrix(g); }

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

inline void split_ws(std::string_view line, std::vector<std::string>& tokens) {
  tokens.clear();
  std::istringstream in{std::string(line)};
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
}

inline std::optional<std::size_t> parse_index(const std::string& tok) {
  if (tok.empty() || tok.size() > 18) return std::nullopt;
  std::size_t value = 0;
  for (char c : tok) {
    if (c < '0' || c > '9') return std::nullopt;
    value = value * 10 + static_cast<std::size_t>(c - '0');
  }
  return value;
}

}  // namespace detail

/// Parses the edge-list format: one "u v" pair per line, '#' comments, optional
/// "n <count>" header. Vertex ids are 0-based.
inline Graph parse_graph(std::string_view text) {
  std::vector<Edge> edges;
  std::map<Edge, std::size_t> first_line;
  std::optional<std::size_t> declared_n;
  std::size_t max_id = 0;
  bool any_edge = false;
  std::vector<std::string> tokens;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = detail::trim(line);
    if (line.empty()) continue;

    detail::split_ws(line, tokens);
    if (tokens.size() == 2 && tokens[0] == "n") {
      if (declared_n) throw GraphError("repeated vertex-count header", line_no);
      const auto count = detail::parse_index(tokens[1]);
      if (!count) throw GraphError("malformed vertex count '" + tokens[1] + "'", line_no);
      declared_n = *count;
      continue;
    }
    if (tokens.size() != 2) throw GraphError("malformed line, expected 'u v'", line_no);
    const auto a = detail::parse_index(tokens[0]);
    const auto b = detail::parse_index(tokens[1]);
    if (!a || !b) throw GraphError("malformed line, vertex ids must be non-negative integers", line_no);
    if (*a == *b) throw GraphError("self-loop at vertex " + tokens[0], line_no);
    Edge e(*a, *b);
    if (const auto [it, fresh] = first_line.emplace(e, line_no); !fresh)
      throw GraphError("duplicate edge " + tokens[0] + " " + tokens[1] + " (first on line " +
                           std::to_string(it->second) + ")",
                       line_no);
    edges.push_back(e);
    max_id = std::max(max_id, e.v);
    any_edge = true;
  }

  std::size_t n = any_edge ? max_id + 1 : 0;
  if (declared_n) {
    if (any_edge && max_id >= *declared_n)
      throw GraphError("vertex " + std::to_string(max_id) + " exceeds declared count " + std::to_string(*declared_n));
    n = *declared_n;
  }
  return Graph::from_edges(n, std::move(edges));
}

/// Writes the edge-list format. `label`, when non-empty, goes into a
/// "# generated: <label>" header.
inline std::string write_edge_list(const Graph& g, std::string_view label = {}, bool with_count = true) {
  std::string out;
  if (!label.empty()) out += "# generated: " + std::string(label) + "\n";
  if (with_count) out += "n " + std::to_string(g.order()) + "\n";
  for (const Edge& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

}  // namespace hsg
