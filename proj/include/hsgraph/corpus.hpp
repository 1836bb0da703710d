#pragma once

// Fixed graph corpus the identity checks run on. Changing it changes the
// acceptance numbers, so keep additions deliberate.

#include <string>
#include <vector>

#include "hsgraph/generators.hpp"

namespace hsg {

struct LabeledGraph {
  std::string label;
  Graph graph;
};

inline std::vector<LabeledGraph> standard_corpus() {
  std::vector<LabeledGraph> out;
  auto add = [&](std::string family, std::initializer_list<long long> params) {
    const std::vector<long long> p(params);
    out.push_back({family_label(family, p), generate(family, p)});
  };
  add("path", {2});
  add("path", {3});
  add("complete", {3});
  add("complete", {4});
  add("complete", {5});
  for (long long m = 4; m <= 8; ++m) add("cycle", {m});
  for (long long m = 3; m <= 5; ++m) add("star", {m});
  add("complete_bipartite", {2, 3});
  add("complete_bipartite", {3, 3});
  add("hypercube", {3});
  add("petersen", {});
  add("folkman", {});
  for (long long eta = 2; eta <= 4; ++eta)
    for (long long k = 2; k <= 4; ++k) add("windmill", {eta, k});
  return out;
}

/// Regular HS building blocks used for the composite checks.
inline std::vector<LabeledGraph> hs_bases() {
  return {{"complete(4)", complete_graph(4)},
          {"cycle(6)", cycle_graph(6)},
          {"complete_bipartite(3,3)", complete_bipartite_graph(3, 3)},
          {"hypercube(3)", hypercube_graph(3)},
          {"petersen()", petersen_graph()}};
}

}  // namespace hsg
