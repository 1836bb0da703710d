// Kemeny's constant of windmill graphs against (2 eta - 1) k^2 / (k + 1).

#include <cstdio>

#include "hsgraph/hsgraph.hpp"

int main() {
  std::printf("%4s %4s %6s %18s %18s\n", "eta", "k", "n", "K measured", "K closed form");
  for (std::size_t eta = 1; eta <= 4; ++eta)
    for (std::size_t k = 2; k <= 4; ++k) {
      const hsg::Graph g = hsg::windmill_graph(eta, k);
      const double measured = hsg::kemeny(g);
      const double closed = (2.0 * eta - 1.0) * k * k / (k + 1.0);
      std::printf("%4zu %4zu %6zu %18.12f %18.12f\n", eta, k, g.order(), measured, closed);
    }
}
