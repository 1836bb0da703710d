// Folkman graph: regular and edge-transitive but not vertex-transitive, and
// still has symmetric hitting times.

#include <cstdio>

#include "hsgraph/hsgraph.hpp"

int main() {
  const hsg::Graph g = hsg::folkman_graph();
  const hsg::SymmetryReport r = hsg::classify(g);
  auto flag = [](const std::optional<bool>& f) { return f ? (*f ? "yes" : "no") : "?"; };
  std::printf("n=%zu m=%zu |Aut|=%zu\n", g.order(), g.size(), r.automorphism_count.value_or(0));
  std::printf("regular=%s walk_regular=%s distance_regular=%s\n", r.regular ? "yes" : "no",
              r.walk_regular ? "yes" : "no", r.distance_regular ? "yes" : "no");
  std::printf("vertex_transitive=%s edge_transitive=%s hs=%s\n", flag(r.vertex_transitive), flag(r.edge_transitive),
              r.hs ? "yes" : "no");
  std::printf("max |E_aT_b - E_bT_a| = %.3g\n", r.max_hitting_asymmetry);
  for (const auto& record : hsg::verify_orbit_asymmetry(g, "folkman()"))
    std::printf("%-22s measured=%.3g  %s\n", record.identity_id.c_str(), record.measured, hsg::to_string(record.status));
}
