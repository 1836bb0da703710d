#pragma once

// Simple random walk quantities: transition matrix, stationary distribution,
// hitting times (linear-solve and resistance routes) and Kemeny's constant
// (definitional and spectral routes).

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <string>

#include "hsgraph/graph.hpp"
#include "hsgraph/resistance.hpp"

namespace hsg {

/// P_ij = [j ~ i] / d_i.
inline Eigen::MatrixXd transition_matrix(const Graph& g) {
  const auto n = static_cast<Eigen::Index>(g.order());
  Eigen::MatrixXd p = Eigen::MatrixXd::Zero(n, n);
  for (Vertex v = 0; v < g.order(); ++v) {
    const double w = 1.0 / static_cast<double>(g.degree(v));
    for (Vertex u : g.neighbors(v)) p(static_cast<Eigen::Index>(v), static_cast<Eigen::Index>(u)) = w;
  }
  return p;
}

/// pi_i = d_i / 2|E|.
inline Eigen::VectorXd stationary(const Graph& g) {
  Eigen::VectorXd pi(static_cast<Eigen::Index>(g.order()));
  const double two_m = 2.0 * static_cast<double>(g.size());
  for (Vertex v = 0; v < g.order(); ++v) pi(static_cast<Eigen::Index>(v)) = static_cast<double>(g.degree(v)) / two_m;
  return pi;
}

/// H_ij = E_i T_j with H_ii = 0. For each target b solves
/// (I - P) restricted to V \ {b} against the all-ones vector.
/// Cost is one dense LU per target, O(n^4) overall.
inline Eigen::MatrixXd hitting_times_solve(const Graph& g) {
  const auto n = static_cast<Eigen::Index>(g.order());
  const Eigen::MatrixXd system = Eigen::MatrixXd::Identity(n, n) - transition_matrix(g);
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n, n);
  Eigen::MatrixXd reduced(n - 1, n - 1);
  const Eigen::VectorXd ones = Eigen::VectorXd::Ones(n - 1);

  for (Eigen::Index b = 0; b < n; ++b) {
    auto full = [b](Eigen::Index k) { return k < b ? k : k + 1; };
    for (Eigen::Index i = 0; i < n - 1; ++i)
      for (Eigen::Index j = 0; j < n - 1; ++j) reduced(i, j) = system(full(i), full(j));
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(reduced);
    if (!(lu.rcond() > 1e-14))
      throw NumericalError("hitting-time system for target " + std::to_string(b) + " is singular");
    const Eigen::VectorXd x = lu.solve(ones);
    for (Eigen::Index i = 0; i < n - 1; ++i) h(full(i), b) = x(i);
  }
  return h;
}

/// H_ab = 1/2 sum_z d_z (R_ab + R_bz - R_az), evaluated as
/// |E| R_ab + (s_b - s_a)/2 with s = R d.
inline Eigen::MatrixXd hitting_times_tetali(const Graph& g, const ResistanceData& rd) {
  const auto n = static_cast<Eigen::Index>(g.order());
  Eigen::VectorXd d(n);
  for (Eigen::Index i = 0; i < n; ++i) d(i) = static_cast<double>(g.degree(static_cast<Vertex>(i)));
  const Eigen::VectorXd s = rd.r * d;
  const double m = static_cast<double>(g.size());
  Eigen::MatrixXd h(n, n);
  for (Eigen::Index a = 0; a < n; ++a)
    for (Eigen::Index b = 0; b < n; ++b) h(a, b) = a == b ? 0.0 : m * rd.r(a, b) + 0.5 * (s(b) - s(a));
  return h;
}

/// K_i = sum_j pi_j H_ij for every start i.
inline Eigen::VectorXd kemeny_by_start(const Eigen::MatrixXd& h, const Eigen::VectorXd& pi) { return h * pi; }

/// Mean of the per-start values after checking they agree to
/// `rel_tol * |K| + 1e-12`. A disagreement throws instead of being averaged.
inline double kemeny_from(const Eigen::MatrixXd& h, const Eigen::VectorXd& pi, double rel_tol = 1e-9) {
  const Eigen::VectorXd k = kemeny_by_start(h, pi);
  const double mean = k.mean();
  const double spread = k.maxCoeff() - k.minCoeff();
  if (!(spread <= rel_tol * std::abs(mean) + 1e-12))
    throw NumericalError("Kemeny constant depends on the start vertex (spread " + std::to_string(spread) + ")");
  return mean;
}

inline double kemeny(const Graph& g, double rel_tol = 1e-9) {
  return kemeny_from(hitting_times_solve(g), stationary(g), rel_tol);
}

/// Sum of 1/(1 - lambda) over the non-unit eigenvalues of P, taken from the
/// symmetric similar matrix D^{-1/2} A D^{-1/2}. The unit eigenvalue is the
/// largest and is dropped by index.
inline double kemeny_spectral(const Graph& g) {
  const auto n = static_cast<Eigen::Index>(g.order());
  Eigen::MatrixXd s = adjacency_matrix(g);
  Eigen::VectorXd inv_sqrt(n);
  for (Eigen::Index i = 0; i < n; ++i) inv_sqrt(i) = 1.0 / std::sqrt(static_cast<double>(g.degree(static_cast<Vertex>(i))));
  s = inv_sqrt.asDiagonal() * s * inv_sqrt.asDiagonal();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(s, Eigen::EigenvaluesOnly);
  if (eig.info() != Eigen::Success) throw NumericalError("eigensolver did not converge");
  const Eigen::VectorXd& lambda = eig.eigenvalues();  // ascending
  double k = 0.0;
  for (Eigen::Index i = 0; i + 1 < n; ++i) k += 1.0 / (1.0 - lambda(i));
  return k;
}

/// Delta_ij = H_ij - H_ji.
inline Eigen::MatrixXd hitting_asymmetry(const Eigen::MatrixXd& h) { return h - h.transpose(); }
inline Eigen::MatrixXd hitting_asymmetry(const Graph& g) { return hitting_asymmetry(hitting_times_solve(g)); }

struct WalkData {
  Eigen::MatrixXd p;
  Eigen::VectorXd pi;
  Eigen::MatrixXd h;
  double kemeny = 0;
  Eigen::MatrixXd asymmetry;
};

/// All walk quantities with hitting times from the linear-solve route.
inline WalkData analyze_walks(const Graph& g, double rel_tol = 1e-9) {
  WalkData w;
  w.p = transition_matrix(g);
  w.pi = stationary(g);
  w.h = hitting_times_solve(g);
  w.kemeny = kemeny_from(w.h, w.pi, rel_tol);
  w.asymmetry = hitting_asymmetry(w.h);
  return w;
}

/// Same as analyze_walks but with hitting times from resistances; O(n^3)
/// instead of O(n^4).
inline WalkData analyze_walks(const Graph& g, const ResistanceData& rd, double rel_tol = 1e-9) {
  WalkData w;
  w.p = transition_matrix(g);
  w.pi = stationary(g);
  w.h = hitting_times_tetali(g, rd);
  w.kemeny = kemeny_from(w.h, w.pi, rel_tol);
  w.asymmetry = hitting_asymmetry(w.h);
  return w;
}

}  // namespace hsg
