#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "hsgraph/corpus.hpp"
#include "hsgraph/generators.hpp"
#include "hsgraph/resistance.hpp"
#include "hsgraph/walks.hpp"
#include "oracles.hpp"

using namespace hsg;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("small closed-form resistances", "[resistance]") {
  const ResistanceData p2 = effective_resistance(path_graph(2));
  CHECK_THAT(p2.r(0, 1), WithinRel(1.0, 1e-12));
  CHECK_THAT(p2.kirchhoff, WithinRel(1.0, 1e-12));
  CHECK_THAT(p2.degree_kirchhoff, WithinRel(1.0, 1e-12));

  // C4 adjacent pair: 1 ohm in parallel with 3 ohms.
  const ResistanceData c4 = effective_resistance(cycle_graph(4));
  CHECK_THAT(c4.r(0, 1), WithinRel(0.75, 1e-12));
  CHECK_THAT(c4.r(0, 2), WithinRel(1.0, 1e-12));
  for (Eigen::Index i = 0; i < 4; ++i) CHECK_THAT(c4.row_sums(i), WithinRel(2.5, 1e-12));
}

TEST_CASE("complete graphs: R_ij = 2/n against the rational oracle", "[resistance][oracle]") {
  for (std::size_t n : {3u, 4u, 5u}) {
    const Graph g = complete_graph(n);
    const auto exact = oracle::exact_resistance(g);
    const ResistanceData rd = effective_resistance(g);
    for (Vertex i = 0; i < n; ++i)
      for (Vertex j = 0; j < n; ++j) {
        if (i == j) continue;
        REQUIRE(exact[i][j] == oracle::cpp_rational(2, static_cast<long long>(n)));
        CHECK_THAT(rd.r(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)), WithinRel(2.0 / n, 1e-12));
      }
  }
}

TEST_CASE("Kirchhoff indices against frozen oracle values", "[resistance][oracle]") {
  // Values from exact rational Laplacian solves.
  const Graph k3 = complete_graph(3);
  CHECK_THAT(kirchhoff_index(k3), WithinRel(2.0, 1e-12));
  CHECK_THAT(degree_kirchhoff_index(k3), WithinRel(8.0, 1e-12));
  const Eigen::VectorXd k3_rows = resistance_row_sums(k3);
  for (Eigen::Index i = 0; i < 3; ++i) CHECK_THAT(k3_rows(i), WithinRel(4.0 / 3.0, 1e-12));

  const Graph star = star_graph(3);
  CHECK_THAT(degree_kirchhoff_index(star), WithinRel(15.0, 1e-12));
  CHECK_THAT(kirchhoff_index(star), WithinRel(9.0, 1e-12));
  const Eigen::VectorXd star_rows = resistance_row_sums(star);
  CHECK_THAT(star_rows(0), WithinRel(3.0, 1e-12));
  for (Eigen::Index i = 1; i < 4; ++i) CHECK_THAT(star_rows(i), WithinRel(5.0, 1e-12));

  CHECK_THAT(kirchhoff_index(petersen_graph()), WithinRel(33.0, 1e-12));
  CHECK_THAT(degree_kirchhoff_index(petersen_graph()), WithinRel(297.0, 1e-12));
  CHECK_THAT(kirchhoff_index(folkman_graph()), WithinRel(116.5, 1e-12));

  // Bowtie: two triangles sharing a vertex.
  CHECK(oracle::exact_kirchhoff(conjoin({k3, 2, 0})) == oracle::cpp_rational(28, 3));
  CHECK_THAT(kirchhoff_index(conjoin({k3, 2, 0})), WithinRel(28.0 / 3.0, 1e-12));
}

TEST_CASE("cycle Kirchhoff index n(n^2-1)/12", "[resistance][oracle]") {
  for (std::size_t n = 3; n <= 8; ++n) {
    const Graph c = cycle_graph(n);
    const oracle::cpp_rational expected(static_cast<long long>(n * (n * n - 1)), 12);
    REQUIRE(oracle::exact_kirchhoff(c) == expected);
    CHECK_THAT(kirchhoff_index(c), WithinRel(oracle::to_double(expected), 1e-12));
  }
}

TEST_CASE("resistance matrix matches rational oracle on random graphs", "[resistance][oracle][property]") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 15; ++trial) {
    const std::size_t n = 3 + trial % 8;
    const Graph g = oracle::random_connected_graph(n, trial % 6, rng);
    const auto exact = oracle::exact_resistance(g);
    const ResistanceData rd = effective_resistance(g);
    for (Vertex i = 0; i < n; ++i)
      for (Vertex j = 0; j < n; ++j)
        CHECK_THAT(rd.r(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)),
                   WithinAbs(oracle::to_double(exact[i][j]), 1e-12));
  }
}

TEST_CASE("eigendecomposition pseudoinverse agrees with rank completion", "[resistance]") {
  for (const auto& [label, g] : standard_corpus()) {
    const Eigen::MatrixXd l = laplacian_matrix(g);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(l);
    const Eigen::VectorXd lambda = eig.eigenvalues();
    Eigen::VectorXd inv = Eigen::VectorXd::Zero(lambda.size());
    for (Eigen::Index i = 1; i < lambda.size(); ++i) inv(i) = 1.0 / lambda(i);  // lambda(0) = 0
    const Eigen::MatrixXd pinv = eig.eigenvectors() * inv.asDiagonal() * eig.eigenvectors().transpose();
    INFO(label);
    CHECK((pinv - laplacian_pseudoinverse(g)).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("resistance invariants", "[resistance][property]") {
  std::mt19937 rng(99);
  std::vector<Graph> graphs;
  for (const auto& entry : standard_corpus()) graphs.push_back(entry.graph);
  for (int trial = 0; trial < 10; ++trial) graphs.push_back(oracle::random_connected_graph(4 + trial, trial * 2, rng));

  for (const Graph& g : graphs) {
    const ResistanceData rd = effective_resistance(g);
    const DistanceMatrix dist(g);
    const auto n = rd.r.rows();
    REQUIRE(rd.r == rd.r.transpose());
    for (Eigen::Index i = 0; i < n; ++i) {
      REQUIRE(rd.r(i, i) == 0.0);
      for (Eigen::Index j = 0; j < n; ++j) {
        if (i == j) continue;
        CHECK(rd.r(i, j) > 0);
        CHECK(rd.r(i, j) <= static_cast<double>(dist(static_cast<Vertex>(i), static_cast<Vertex>(j))) + 1e-12);
        for (Eigen::Index k = 0; k < n; ++k) CHECK(rd.r(i, k) <= rd.r(i, j) + rd.r(j, k) + 1e-12);
      }
    }
    CHECK_THAT(rd.kirchhoff, WithinRel(0.5 * rd.row_sums.sum(), 1e-12));
    CHECK_THAT(rd.degree_kirchhoff, WithinRel(2.0 * static_cast<double>(g.size()) * kemeny(g), 1e-9));
    if (const auto d = g.regular_degree()) {
      CHECK((rd.row_sums.array() - rd.row_sums(0)).abs().maxCoeff() <= 1e-9 * rd.row_sums(0));
      CHECK_THAT(rd.kirchhoff, WithinRel(0.5 * static_cast<double>(n) * rd.row_sums(0), 1e-9));
      CHECK_THAT(rd.kirchhoff, WithinRel(static_cast<double>(n) / static_cast<double>(*d) * kemeny(g), 1e-9));
    }
  }
}

TEST_CASE("Rayleigh monotonicity: adding an edge never raises a resistance", "[resistance][property]") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 5; ++trial) {
    const std::size_t n = 6 + trial;
    const Graph g = oracle::random_connected_graph(n, 2, rng);
    const ResistanceData before = effective_resistance(g);
    for (Vertex a = 0; a < n; ++a)
      for (Vertex b = a + 1; b < n; ++b) {
        if (g.has_edge(a, b)) continue;
        std::vector<Edge> edges(g.edges().begin(), g.edges().end());
        edges.emplace_back(a, b);
        const ResistanceData after = effective_resistance(Graph::from_edges(n, edges));
        CHECK((after.r - before.r).maxCoeff() <= 1e-12);
      }
  }
}
