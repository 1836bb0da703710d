#pragma once

// Identity harness: both sides of every hitting-time / resistance identity,
// measured on concrete graphs and compared at a relative tolerance.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "hsgraph/generators.hpp"
#include "hsgraph/graph.hpp"
#include "hsgraph/resistance.hpp"
#include "hsgraph/symmetry.hpp"
#include "hsgraph/walks.hpp"

namespace hsg {

enum class Status { match, mismatch, not_applicable };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::match: return "match";
    case Status::mismatch: return "mismatch";
    case Status::not_applicable: return "not-applicable";
  }
  return "?";
}

inline Status status_from_string(std::string_view s) {
  if (s == "match") return Status::match;
  if (s == "mismatch") return Status::mismatch;
  if (s == "not-applicable") return Status::not_applicable;
  throw std::invalid_argument("unknown record status '" + std::string(s) + "'");
}

struct Tolerance {
  double rel = 1e-9;
  double abs_floor = 1e-12;
};

/// One identity check on one graph.
///
/// `scale` is the magnitude rel_error is measured against: |predicted| for
/// scalar identities, and a natural reference (largest hitting time, R(0), or
/// 1 for already-relative deviations) when the predicted value is 0.
/// rel_error = abs_error / scale and status is match iff
/// abs_error <= max(rel * scale, abs_floor).
struct VerificationRecord {
  std::string identity_id;
  std::string graph_label;
  double predicted = 0;
  double measured = 0;
  double scale = 1;
  double abs_error = 0;
  double rel_error = 0;
  Status status = Status::not_applicable;
};

inline VerificationRecord make_record(std::string id, std::string label, double predicted, double measured,
                                      double scale, const Tolerance& tol) {
  VerificationRecord r{std::move(id), std::move(label), predicted, measured, scale, 0, 0, Status::mismatch};
  r.abs_error = std::abs(predicted - measured);
  r.rel_error = scale > 0 ? r.abs_error / scale : r.abs_error;
  if (r.abs_error <= std::max(tol.rel * scale, tol.abs_floor)) r.status = Status::match;
  return r;
}

inline VerificationRecord make_record(std::string id, std::string label, double predicted, double measured,
                                      const Tolerance& tol) {
  return make_record(std::move(id), std::move(label), predicted, measured, std::abs(predicted), tol);
}

inline VerificationRecord not_applicable(VerificationRecord r) {
  r.status = Status::not_applicable;
  return r;
}

inline VerificationRecord not_applicable(std::string id, std::string label) {
  constexpr double nan = std::numeric_limits<double>::quiet_NaN();
  return {std::move(id), std::move(label), nan, nan, nan, nan, nan, Status::not_applicable};
}

inline void sort_records(std::vector<VerificationRecord>& records) {
  std::stable_sort(records.begin(), records.end(), [](const auto& a, const auto& b) {
    return a.graph_label != b.graph_label ? a.graph_label < b.graph_label : a.identity_id < b.identity_id;
  });
}

inline bool any_mismatch(const std::vector<VerificationRecord>& records) {
  return std::any_of(records.begin(), records.end(), [](const auto& r) { return r.status == Status::mismatch; });
}

/// The composite's hypotheses (regular, HS base) do not hold.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Largest |A_ij - B_ij| / |B_ij| over i != j.
inline double max_offdiag_relative_deviation(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  double worst = 0;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (i != j) worst = std::max(worst, std::abs(a(i, j) - b(i, j)) / std::abs(b(i, j)));
  return worst;
}

/// Chandra commute-time identity, the resistance formula for one-way hitting
/// times, the regular-graph Kirchhoff/Kemeny relation, constancy of the
/// resistance row sums, and R* = 2|E| K.
inline std::vector<VerificationRecord> verify_base_identities(const Graph& g, const std::string& label,
                                                              const Tolerance& tol = {}) {
  const ResistanceData rd = effective_resistance(g);
  const Eigen::MatrixXd h = hitting_times_solve(g);
  const Eigen::MatrixXd ht = hitting_times_tetali(g, rd);
  const double k = kemeny_from(h, stationary(g), tol.rel);
  const double two_m = 2.0 * static_cast<double>(g.size());
  const auto n = static_cast<double>(g.order());

  std::vector<VerificationRecord> out;
  const Eigen::MatrixXd commute = h + h.transpose();
  out.push_back(
      make_record("eq1-chandra", label, 0.0, max_offdiag_relative_deviation(commute, two_m * rd.r), 1.0, tol));
  out.push_back(make_record("eq4-tetali", label, 0.0, max_offdiag_relative_deviation(ht, h), 1.0, tol));

  if (const auto d = g.regular_degree()) {
    out.push_back(make_record("eq2-regular", label, n / static_cast<double>(*d) * k, rd.kirchhoff, tol));
    // Row sum farthest from the mean: equals 2R(G)/n only when all are equal.
    const double mean = rd.row_sums.mean();
    Eigen::Index worst = 0;
    (rd.row_sums.array() - mean).abs().maxCoeff(&worst);
    out.push_back(make_record("iii-row-sums", label, rd.kirchhoff, 0.5 * n * rd.row_sums(worst), tol));
  } else {
    out.push_back(not_applicable("eq2-regular", label));
    out.push_back(not_applicable("iii-row-sums", label));
  }
  out.push_back(make_record("rstar-2mk", label, two_m * k, rd.degree_kirchhoff, tol));
  sort_records(out);
  return out;
}

/// Closed forms for the composite of `alpha` copies of `base` glued at
/// `glue`. Emits the printed forms of the Kirchhoff relations with the
/// cross-copy factor 2(alpha-1)/n (ids ending "-paper") and the forms recomputed with
/// 2(alpha-1)(n-1)/n ("-corrected"); the two coincide at alpha = 1.
///
/// Unless `force` is set the base must be regular and HS; with `force` every
/// record is computed but marked not-applicable.
inline std::vector<VerificationRecord> verify_composite(const Graph& base, std::size_t alpha, Vertex glue,
                                                        const std::string& label, const Tolerance& tol = {},
                                                        bool force = false) {
  if (alpha < 1) throw PreconditionError("composite needs alpha >= 1");
  const auto degree = base.regular_degree();
  const bool hypotheses = degree && is_hs(base, tol.rel);
  if (!hypotheses && !force)
    throw PreconditionError(degree ? "base graph is not HS (hitting times are asymmetric)"
                                   : "base graph is not regular");

  const Graph g = conjoin({base, alpha, glue});
  const ResistanceData rd1 = effective_resistance(base);
  const ResistanceData rd = effective_resistance(g);
  const double k1 = kemeny(base, tol.rel);
  const double k = kemeny(g, tol.rel);

  const auto a = static_cast<double>(alpha);
  const auto n = static_cast<double>(base.order());
  const double d = degree ? static_cast<double>(*degree) : 2.0 * static_cast<double>(base.size()) / n;
  const double printed_cross = 2.0 * (a - 1.0) / n;
  const double corrected_cross = 2.0 * (a - 1.0) * (n - 1.0) / n;

  std::vector<VerificationRecord> out;
  out.push_back(make_record("prop4", label, (2 * a - 1) * k1, k, tol));
  out.push_back(make_record("prop5-paper", label, a * (1 + printed_cross) * rd1.kirchhoff, rd.kirchhoff, tol));
  out.push_back(make_record("prop5-corrected", label, a * (1 + corrected_cross) * rd1.kirchhoff, rd.kirchhoff, tol));
  out.push_back(make_record("prop6-paper", label, a * (n + 2 * a - 2) / (d * (2 * a - 1)) * k, rd.kirchhoff, tol));
  out.push_back(make_record("prop6-corrected", label, a * (n + 2 * (a - 1) * (n - 1)) / (d * (2 * a - 1)) * k,
                            rd.kirchhoff, tol));
  out.push_back(make_record("prop7", label, a * (2 * a - 1) * rd1.degree_kirchhoff, rd.degree_kirchhoff, tol));
  out.push_back(make_record("prop7-d2", label, a * (2 * a - 1) * d * d * rd1.kirchhoff, rd.degree_kirchhoff, tol));
  out.push_back(make_record("prop8-paper", label, (2 * a - 1) * n * d * d / (n + 2 * a - 2) * rd.kirchhoff,
                            rd.degree_kirchhoff, tol));
  out.push_back(make_record("prop8-corrected", label,
                            (2 * a - 1) * n * d * d / (n + 2 * (a - 1) * (n - 1)) * rd.kirchhoff,
                            rd.degree_kirchhoff, tol));
  if (!hypotheses)
    for (auto& r : out) r = not_applicable(std::move(r));
  sort_records(out);
  return out;
}

/// Hitting-time asymmetry against the automorphism group: Delta_{a,gamma(a)}
/// vanishes for every automorphism gamma, Delta is constant on each pair of
/// vertex orbits, and, for edge-transitive graphs, Delta across an edge ab
/// equals 2|E| (1/d_b - 1/d_a).
inline std::vector<VerificationRecord> verify_orbit_asymmetry(const Graph& g, const std::string& label,
                                                              const Tolerance& tol = {},
                                                              std::size_t cap = kDefaultAutomorphismCap) {
  const Eigen::MatrixXd h = hitting_times_solve(g);
  const Eigen::MatrixXd delta = hitting_asymmetry(h);
  const double scale = h.maxCoeff();

  double worst_fixed = 0;
  detail::OrbitCollector collector(g);
  const std::size_t count = for_each_automorphism(
      g,
      [&](std::span<const Vertex> image) {
        collector.add(image);
        for (Vertex v = 0; v < image.size(); ++v)
          worst_fixed = std::max(worst_fixed,
                                 std::abs(delta(static_cast<Eigen::Index>(v), static_cast<Eigen::Index>(image[v]))));
      },
      cap);
  const OrbitPartition orbits = collector.finish(count);

  std::vector<VerificationRecord> out;
  out.push_back(make_record("prop1-automorphisms", label, 0.0, worst_fixed, scale, tol));

  auto two_digits = [](std::size_t x) { return (x < 10 ? "0" : "") + std::to_string(x); };
  for (std::size_t i = 0; i < orbits.size(); ++i)
    for (std::size_t j = i; j < orbits.size(); ++j) {
      double lo = std::numeric_limits<double>::infinity(), hi = -lo;
      for (Vertex a : orbits.classes[i])
        for (Vertex b : orbits.classes[j]) {
          if (a == b) continue;
          const double value = delta(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b));
          lo = std::min(lo, value);
          hi = std::max(hi, value);
        }
      if (lo > hi) continue;  // singleton class paired with itself
      out.push_back(
          make_record("prop2-spread-" + two_digits(i) + "-" + two_digits(j), label, 0.0, hi - lo, scale, tol));
    }

  if (orbits.edge_classes.size() == 1) {
    const Edge e = g.edges().front();
    const double predicted = 2.0 * static_cast<double>(g.size()) *
                             (1.0 / static_cast<double>(g.degree(e.v)) - 1.0 / static_cast<double>(g.degree(e.u)));
    const double measured = delta(static_cast<Eigen::Index>(e.u), static_cast<Eigen::Index>(e.v));
    out.push_back(make_record("prop3-edge-asymmetry", label, predicted, measured,
                              predicted == 0 ? scale : std::abs(predicted), tol));
  }
  sort_records(out);
  return out;
}

/// K of W(eta, k) against (2 eta - 1) k^2 / (k + 1).
inline VerificationRecord verify_windmill(std::size_t eta, std::size_t k, const Tolerance& tol = {}) {
  if (eta < 1 || k < 2) throw PreconditionError("windmill check needs eta >= 1 and k >= 2");
  const Graph g = windmill_graph(eta, k);
  const auto e = static_cast<double>(eta);
  const auto kk = static_cast<double>(k);
  const double predicted = (2 * e - 1) * kk * kk / (kk + 1);
  return make_record("windmill", "windmill(" + std::to_string(eta) + "," + std::to_string(k) + ")", predicted,
                     kemeny(g, tol.rel), tol);
}

}  // namespace hsg
