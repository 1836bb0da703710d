#pragma once

// Effective resistances with unit resistors on every edge, and the two
// Kirchhoffian indices built from them.

#include <Eigen/Dense>

#include <stdexcept>
#include <string>

#include "hsgraph/graph.hpp"

namespace hsg {

/// Linear-algebra breakdown that cannot happen for a valid connected graph in
/// exact arithmetic.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Eigen::MatrixXd adjacency_matrix(const Graph& g) {
  const auto n = static_cast<Eigen::Index>(g.order());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (const Edge& e : g.edges()) {
    a(static_cast<Eigen::Index>(e.u), static_cast<Eigen::Index>(e.v)) = 1.0;
    a(static_cast<Eigen::Index>(e.v), static_cast<Eigen::Index>(e.u)) = 1.0;
  }
  return a;
}

/// Combinatorial Laplacian diag(d) - A.
inline Eigen::MatrixXd laplacian_matrix(const Graph& g) {
  Eigen::MatrixXd l = -adjacency_matrix(g);
  for (Vertex v = 0; v < g.order(); ++v) {
    const auto i = static_cast<Eigen::Index>(v);
    l(i, i) = static_cast<double>(g.degree(v));
  }
  return l;
}

/// Moore-Penrose pseudoinverse of the Laplacian via (L + J/n)^{-1} - J/n.
/// L + J/n is positive definite exactly when the graph is connected.
inline Eigen::MatrixXd laplacian_pseudoinverse(const Graph& g) {
  const auto n = static_cast<Eigen::Index>(g.order());
  const double shift = 1.0 / static_cast<double>(n);
  Eigen::MatrixXd shifted = laplacian_matrix(g).array() + shift;
  Eigen::LLT<Eigen::MatrixXd> llt(shifted);
  if (llt.info() != Eigen::Success) throw NumericalError("Cholesky factorization of L + J/n failed");
  Eigen::MatrixXd m = llt.solve(Eigen::MatrixXd::Identity(n, n));
  m.array() -= shift;
  return 0.5 * (m + m.transpose());
}

struct ResistanceData {
  Eigen::MatrixXd r;          ///< R_ij, symmetric with zero diagonal
  Eigen::VectorXd row_sums;   ///< R(i) = sum_j R_ij
  double kirchhoff = 0;       ///< R(G) = sum_{i<j} R_ij
  double degree_kirchhoff = 0;///< R*(G) = sum_{i<j} d_i d_j R_ij
};

inline ResistanceData effective_resistance(const Graph& g) {
  const Eigen::MatrixXd m = laplacian_pseudoinverse(g);
  const auto n = m.rows();
  ResistanceData rd;
  rd.r.resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    rd.r(i, i) = 0.0;
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const double value = m(i, i) + m(j, j) - 2.0 * m(i, j);
      rd.r(i, j) = value;
      rd.r(j, i) = value;
    }
  }
  rd.row_sums = rd.r.rowwise().sum();
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto di = static_cast<double>(g.degree(static_cast<Vertex>(i)));
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const auto dj = static_cast<double>(g.degree(static_cast<Vertex>(j)));
      rd.kirchhoff += rd.r(i, j);
      rd.degree_kirchhoff += di * dj * rd.r(i, j);
    }
  }
  return rd;
}

inline double kirchhoff_index(const Graph& g) { return effective_resistance(g).kirchhoff; }
inline double degree_kirchhoff_index(const Graph& g) { return effective_resistance(g).degree_kirchhoff; }
inline Eigen::VectorXd resistance_row_sums(const Graph& g) { return effective_resistance(g).row_sums; }

}  // namespace hsg
