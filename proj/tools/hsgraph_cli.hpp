#pragma once

// Command-line front end. Exit codes: 0 success with every record matching,
// 1 at least one mismatch record, 2 usage or input error, 3 numerical failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "hsgraph/hsgraph.hpp"

namespace hsg::cli {

enum ExitCode : int { kOk = 0, kMismatch = 1, kUsage = 2, kNumerical = 3 };

struct RunConfig {
  double tolerance = 1e-9;
  std::size_t max_n = 2000;
  std::size_t automorphism_cap = kDefaultAutomorphismCap;
  std::string output_format = "text";
  std::string output_path;
};

/// Input problems that map to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

// Hitting times from the O(n^4) linear-solve route up to this order, from
// resistances above it.
constexpr std::size_t kSolveRouteMaxOrder = 256;

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Graph load_graph(const std::string& path, const RunConfig& cfg) {
  Graph g = parse_graph(read_file(path));
  if (g.order() > cfg.max_n)
    throw InputError("graph has " + std::to_string(g.order()) + " vertices, above --max-n " + std::to_string(cfg.max_n));
  return g;
}

inline void check_order(const Graph& g, const RunConfig& cfg) {
  if (g.order() > cfg.max_n)
    throw InputError("graph has " + std::to_string(g.order()) + " vertices, above --max-n " + std::to_string(cfg.max_n));
}

inline std::string num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

inline nlohmann::json matrix_json(const Eigen::MatrixXd& m) {
  auto rows = nlohmann::json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    auto row = nlohmann::json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline std::string matrix_text(const Eigen::MatrixXd& m) {
  std::string out;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) out += (j ? " " : "") + num(m(i, j));
    out += "\n";
  }
  return out;
}

inline std::string yes_no(const std::optional<bool>& flag) { return flag ? (*flag ? "yes" : "no") : "not computed"; }

inline nlohmann::json flag_json(const std::optional<bool>& flag) {
  return flag ? nlohmann::json(*flag) : nlohmann::json("not computed");
}

inline std::string join(const std::vector<std::size_t>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s;
}

class Runner {
 public:
  Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int run(int argc, const char* const* argv) {
    CLI::App app{"Random-walk and electric-network invariants of simple connected graphs", "hsgraph"};
    app.fallthrough();
    app.require_subcommand(1);
    app.add_option("--tol", cfg_.tolerance, "relative tolerance for identity checks")
        ->check(CLI::PositiveNumber);
    app.add_option("--format", cfg_.output_format, "output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--max-n", cfg_.max_n, "largest accepted vertex count")->check(CLI::Range(std::size_t{2}, SIZE_MAX));
    app.add_option("--automorphism-cap", cfg_.automorphism_cap, "largest automorphism group enumerated")
        ->check(CLI::PositiveNumber);

    std::string family, file;
    std::vector<long long> params;
    bool full = false, force = false;
    std::size_t copies = 1, at = 0, eta = 1, k = 2;
    std::vector<std::string> family_spec;

    auto* gen = app.add_subcommand("generate", "emit a named graph as an edge list");
    gen->add_option("family", family, "complete|cycle|path|star|complete_bipartite|hypercube|petersen|folkman|windmill")
        ->required();
    gen->add_option("params", params, "family parameters");
    gen->add_option("-o,--output", cfg_.output_path, "write to FILE instead of stdout");

    auto* info = app.add_subcommand("info", "vertex/edge counts, degree census, diameter");
    info->add_option("file", file)->required();

    auto* indices = app.add_subcommand("indices", "Kemeny constant, Kirchhoff indices, stationary distribution");
    indices->add_option("file", file)->required();
    indices->add_flag("--full", full, "also print resistance and hitting-time matrices");

    auto* classify_cmd = app.add_subcommand("classify", "symmetry classification");
    classify_cmd->add_option("file", file)->required();

    auto* conj = app.add_subcommand("conjoin", "glue copies of a graph at one vertex");
    conj->add_option("file", file)->required();
    conj->add_option("--copies", copies)->required()->check(CLI::PositiveNumber);
    conj->add_option("--at", at, "glue vertex (default 0)");
    conj->add_option("-o,--output", cfg_.output_path, "write to FILE instead of stdout");

    auto* verify = app.add_subcommand("verify", "identity verification reports");
    verify->require_subcommand(1);
    auto* v_ident = verify->add_subcommand("identities", "base identities on one graph");
    v_ident->add_option("file", file)->required();
    auto* v_comp = verify->add_subcommand("composite", "composite closed forms");
    auto* base_opt = v_comp->add_option("--base", file, "base graph file");
    auto* fam_opt = v_comp->add_option("--family", family_spec, "NAME PARAMS...")->expected(1, -1);
    base_opt->excludes(fam_opt);
    v_comp->add_option("--copies", copies)->required()->check(CLI::PositiveNumber);
    v_comp->add_option("--at", at, "glue vertex (default 0)");
    v_comp->add_flag("--force", force, "run on a base that fails the hypotheses; records become not-applicable");
    auto* v_orbits = verify->add_subcommand("orbits", "hitting-time asymmetry against automorphism orbits");
    v_orbits->add_option("file", file)->required();
    auto* v_wind = verify->add_subcommand("windmill", "Kemeny constant of the windmill graph");
    v_wind->add_option("--eta", eta)->required()->check(CLI::PositiveNumber);
    v_wind->add_option("--k", k)->required()->check(CLI::Range(std::size_t{2}, SIZE_MAX));

    try {
      app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
      const int code = app.exit(e, out_, err_);
      return code == 0 ? kOk : kUsage;
    }

    try {
      if (*gen) return cmd_generate(family, params);
      if (*info) return cmd_info(file);
      if (*indices) return cmd_indices(file, full);
      if (*classify_cmd) return cmd_classify(file);
      if (*conj) return cmd_conjoin(file, copies, at);
      if (*v_ident) return cmd_verify_identities(file);
      if (*v_comp) {
        if (file.empty() && family_spec.empty()) throw InputError("verify composite needs --base FILE or --family NAME");
        return cmd_verify_composite(file, family_spec, copies, at, force);
      }
      if (*v_orbits) return cmd_verify_orbits(file);
      if (*v_wind) return cmd_verify_windmill(eta, k);
    } catch (const InputError& e) {
      err_ << "error: " << e.what() << "\n";
      return kUsage;
    } catch (const GraphError& e) {
      err_ << "error: " << e.what() << "\n";
      return kUsage;
    } catch (const PreconditionError& e) {
      err_ << "error: " << e.what() << " (use --force to run anyway)\n";
      return kUsage;
    } catch (const AutomorphismCapExceeded& e) {
      err_ << "error: " << e.what() << "; raise --automorphism-cap to decide transitivity\n";
      return kUsage;
    } catch (const NumericalError& e) {
      err_ << "numerical failure: " << e.what() << "\n";
      return kNumerical;
    } catch (const ClassificationError& e) {
      err_ << "numerical failure: " << e.what() << "\n";
      return kNumerical;
    }
    return kUsage;
  }

 private:
  void emit(const std::string& text) {
    if (cfg_.output_path.empty()) {
      out_ << text;
      return;
    }
    std::ofstream f(cfg_.output_path, std::ios::binary);
    if (!f) throw InputError("cannot write '" + cfg_.output_path + "'");
    f << text;
  }

  bool json() const { return cfg_.output_format == "json"; }

  int emit_report(const std::string& label, const Graph& g, std::vector<VerificationRecord> records) {
    sort_records(records);
    Report report{{cfg_.tolerance, cfg_.max_n, cfg_.automorphism_cap}, {label, g.order(), g.size()}, std::move(records)};
    emit(json() ? to_json(report) : format_text(report));
    return any_mismatch(report.records) ? kMismatch : kOk;
  }

  int cmd_generate(const std::string& family, const std::vector<long long>& params) {
    const Graph g = generate(family, params);
    check_order(g, cfg_);
    emit(write_edge_list(g, family_label(family, params)));
    return kOk;
  }

  int cmd_info(const std::string& path) {
    const Graph g = load_graph(path, cfg_);
    std::map<std::size_t, std::size_t> census;
    for (Vertex v = 0; v < g.order(); ++v) ++census[g.degree(v)];
    const std::size_t diameter = distance_matrix(g).diameter();
    if (json()) {
      nlohmann::json j;
      j["n"] = g.order();
      j["m"] = g.size();
      j["degree_census"] = nlohmann::json::object();
      for (auto [d, c] : census) j["degree_census"][std::to_string(d)] = c;
      j["diameter"] = diameter;
      j["regular"] = g.is_regular();
      j["bipartite"] = g.is_bipartite();
      emit(j.dump(2) + "\n");
      return kOk;
    }
    std::string s = "n: " + std::to_string(g.order()) + "\nm: " + std::to_string(g.size()) + "\ndegrees:";
    for (auto [d, c] : census) s += " " + std::to_string(d) + "x" + std::to_string(c);
    s += "\ndiameter: " + std::to_string(diameter) + "\nregular: " + (g.is_regular() ? "yes" : "no") +
         "\nbipartite: " + (g.is_bipartite() ? "yes" : "no") + "\n";
    emit(s);
    return kOk;
  }

  int cmd_indices(const std::string& path, bool full) {
    const Graph g = load_graph(path, cfg_);
    const ResistanceData rd = effective_resistance(g);
    const WalkData w = g.order() <= kSolveRouteMaxOrder ? analyze_walks(g, cfg_.tolerance)
                                                        : analyze_walks(g, rd, cfg_.tolerance);
    if (json()) {
      nlohmann::json j;
      j["n"] = g.order();
      j["m"] = g.size();
      j["kemeny"] = w.kemeny;
      j["kirchhoff"] = rd.kirchhoff;
      j["degree_kirchhoff"] = rd.degree_kirchhoff;
      j["stationary"] = std::vector<double>(w.pi.data(), w.pi.data() + w.pi.size());
      if (full) {
        j["resistance"] = matrix_json(rd.r);
        j["hitting_times"] = matrix_json(w.h);
      }
      emit(j.dump(2) + "\n");
      return kOk;
    }
    std::string s = "n: " + std::to_string(g.order()) + "\nm: " + std::to_string(g.size()) +
                    "\nkemeny: " + num(w.kemeny) + "\nkirchhoff: " + num(rd.kirchhoff) +
                    "\ndegree_kirchhoff: " + num(rd.degree_kirchhoff) + "\nstationary:";
    for (Eigen::Index i = 0; i < w.pi.size(); ++i) s += " " + num(w.pi(i));
    s += "\n";
    if (full) s += "resistance:\n" + matrix_text(rd.r) + "hitting_times:\n" + matrix_text(w.h);
    emit(s);
    return kOk;
  }

  int cmd_classify(const std::string& path) {
    const Graph g = load_graph(path, cfg_);
    const SymmetryReport r = classify(g, {cfg_.tolerance, cfg_.automorphism_cap, kMaxAutomorphismOrder});
    if (json()) {
      nlohmann::json j;
      j["regular"] = r.regular;
      j["walk_regular"] = r.walk_regular;
      j["distance_regular"] = r.distance_regular;
      j["vertex_transitive"] = flag_json(r.vertex_transitive);
      j["edge_transitive"] = flag_json(r.edge_transitive);
      j["hs"] = r.hs;
      j["max_hitting_asymmetry"] = r.max_hitting_asymmetry;
      j["automorphism_count"] = r.automorphism_count ? nlohmann::json(*r.automorphism_count) : nlohmann::json(nullptr);
      if (r.orbits) {
        j["vertex_orbits"] = r.orbits->classes;
        auto edges = nlohmann::json::array();
        for (const auto& cls : r.orbits->edge_classes) {
          auto c = nlohmann::json::array();
          for (const Edge& e : cls) c.push_back({e.u, e.v});
          edges.push_back(std::move(c));
        }
        j["edge_orbits"] = std::move(edges);
      }
      if (r.intersection_array) j["intersection_array"] = {{"b", r.intersection_array->b}, {"c", r.intersection_array->c}};
      if (!r.not_computed_reason.empty()) j["not_computed_reason"] = r.not_computed_reason;
      emit(j.dump(2) + "\n");
    } else {
      std::string s;
      s += std::string("regular: ") + (r.regular ? "yes" : "no") + "\n";
      s += std::string("walk_regular: ") + (r.walk_regular ? "yes" : "no") + "\n";
      s += std::string("distance_regular: ") + (r.distance_regular ? "yes" : "no") + "\n";
      s += "vertex_transitive: " + yes_no(r.vertex_transitive) + "\n";
      s += "edge_transitive: " + yes_no(r.edge_transitive) + "\n";
      s += std::string("hs: ") + (r.hs ? "yes" : "no") + "\n";
      s += "max_hitting_asymmetry: " + num(r.max_hitting_asymmetry) + "\n";
      s += "automorphism_count: " + (r.automorphism_count ? std::to_string(*r.automorphism_count) : "not computed") + "\n";
      if (r.orbits) {
        s += "vertex_orbits:";
        for (const auto& cls : r.orbits->classes) s += " {" + join(cls) + "}";
        s += "\nedge_orbits: " + std::to_string(r.orbits->edge_classes.size()) + " (sizes";
        for (const auto& cls : r.orbits->edge_classes) s += " " + std::to_string(cls.size());
        s += ")\n";
      }
      if (r.intersection_array)
        s += "intersection_array: {" + join(r.intersection_array->b) + "; " + join(r.intersection_array->c) + "}\n";
      if (!r.not_computed_reason.empty()) s += "note: " + r.not_computed_reason + "\n";
      emit(s);
    }
    if (r.automorphism_cap_exceeded) {
      err_ << "error: " << r.not_computed_reason << "; raise --automorphism-cap to decide transitivity\n";
      return kUsage;
    }
    return kOk;
  }

  int cmd_conjoin(const std::string& path, std::size_t copies, Vertex at) {
    const Graph base = load_graph(path, cfg_);
    if (at >= base.order()) throw InputError("--at " + std::to_string(at) + " is not a vertex of the base graph");
    const Graph g = conjoin({base, copies, at});
    check_order(g, cfg_);
    emit(write_edge_list(g, "conjoin(" + path + "," + std::to_string(copies) + "," + std::to_string(at) + ")"));
    return kOk;
  }

  int cmd_verify_identities(const std::string& path) {
    const Graph g = load_graph(path, cfg_);
    return emit_report(path, g, verify_base_identities(g, path, tolerance()));
  }

  int cmd_verify_composite(const std::string& path, const std::vector<std::string>& family_spec, std::size_t copies,
                           Vertex at, bool force) {
    std::string base_label = path;
    std::optional<Graph> base;
    if (!family_spec.empty()) {
      std::vector<long long> params;
      for (std::size_t i = 1; i < family_spec.size(); ++i) {
        try {
          std::size_t used = 0;
          params.push_back(std::stoll(family_spec[i], &used));
          if (used != family_spec[i].size()) throw std::invalid_argument("trailing characters");
        } catch (const std::exception&) {
          throw InputError("family parameter '" + family_spec[i] + "' is not an integer");
        }
      }
      base = generate(family_spec[0], params);
      base_label = family_label(family_spec[0], params);
    } else {
      base = load_graph(path, cfg_);
    }
    if (at >= base->order()) throw InputError("--at " + std::to_string(at) + " is not a vertex of the base graph");
    const Graph g = conjoin({*base, copies, at});
    check_order(g, cfg_);
    const std::string label = "conjoin(" + base_label + "," + std::to_string(copies) + "," + std::to_string(at) + ")";
    return emit_report(label, g, verify_composite(*base, copies, at, label, tolerance(), force));
  }

  int cmd_verify_orbits(const std::string& path) {
    const Graph g = load_graph(path, cfg_);
    if (g.order() > kMaxAutomorphismOrder)
      throw InputError("verify orbits needs n <= " + std::to_string(kMaxAutomorphismOrder));
    return emit_report(path, g, verify_orbit_asymmetry(g, path, tolerance(), cfg_.automorphism_cap));
  }

  int cmd_verify_windmill(std::size_t eta, std::size_t k) {
    const Graph g = windmill_graph(eta, k);
    check_order(g, cfg_);
    auto rec = verify_windmill(eta, k, tolerance());
    const std::string label = rec.graph_label;
    return emit_report(label, g, {std::move(rec)});
  }

  Tolerance tolerance() const { return {cfg_.tolerance, 1e-12}; }

  std::ostream& out_;
  std::ostream& err_;
  RunConfig cfg_;
};

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  detail::Runner runner(out, err);
  return runner.run(argc, argv);
}

/// Convenience overload for tests: args exclude the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"hsgraph"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace hsg::cli
