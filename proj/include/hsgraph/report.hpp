#pragma once

// Verification reports: JSON (17 significant digits, parsed back with
// nlohmann/json) and a fixed-width text table (9 significant digits).
// format_text(parse_report_json(to_json(r))) == format_text(r) byte for byte.

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <limits>
#include <string>
#include <vector>

#include "hsgraph/verify.hpp"

namespace hsg {

struct ReportConfig {
  double tolerance = 1e-9;
  std::size_t max_n = 2000;
  std::size_t automorphism_cap = kDefaultAutomorphismCap;
};

struct ReportGraph {
  std::string label;
  std::size_t n = 0;
  std::size_t m = 0;
};

struct Report {
  ReportConfig config;
  ReportGraph graph;
  std::vector<VerificationRecord> records;
};

namespace detail {

inline std::string format_number(double x, int digits) {
  if (!std::isfinite(x)) return digits == 17 ? "null" : "n/a";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

inline std::string json_string(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out + "\"";
}

inline double json_number(const nlohmann::json& j) {
  return j.is_null() ? std::numeric_limits<double>::quiet_NaN() : j.get<double>();
}

inline std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

}  // namespace detail

inline std::string to_json(const Report& r) {
  using detail::format_number;
  using detail::json_string;
  std::string out = "{\n";
  out += "  \"config\": {\"tolerance\": " + format_number(r.config.tolerance, 17) +
         ", \"max_n\": " + std::to_string(r.config.max_n) +
         ", \"automorphism_cap\": " + std::to_string(r.config.automorphism_cap) + "},\n";
  out += "  \"graph\": {\"label\": " + json_string(r.graph.label) + ", \"n\": " + std::to_string(r.graph.n) +
         ", \"m\": " + std::to_string(r.graph.m) + "},\n";
  out += "  \"records\": [";
  for (std::size_t i = 0; i < r.records.size(); ++i) {
    const auto& rec = r.records[i];
    out += i ? ",\n    " : "\n    ";
    out += "{\"identity_id\": " + json_string(rec.identity_id) + ", \"graph_label\": " + json_string(rec.graph_label) +
           ", \"predicted\": " + format_number(rec.predicted, 17) + ", \"measured\": " + format_number(rec.measured, 17) +
           ", \"scale\": " + format_number(rec.scale, 17) + ", \"abs_error\": " + format_number(rec.abs_error, 17) +
           ", \"rel_error\": " + format_number(rec.rel_error, 17) + ", \"status\": " + json_string(to_string(rec.status)) +
           "}";
  }
  out += r.records.empty() ? "]\n}\n" : "\n  ]\n}\n";
  return out;
}

inline Report parse_report_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  Report r;
  r.config.tolerance = j.at("config").at("tolerance").get<double>();
  r.config.max_n = j.at("config").at("max_n").get<std::size_t>();
  r.config.automorphism_cap = j.at("config").at("automorphism_cap").get<std::size_t>();
  r.graph.label = j.at("graph").at("label").get<std::string>();
  r.graph.n = j.at("graph").at("n").get<std::size_t>();
  r.graph.m = j.at("graph").at("m").get<std::size_t>();
  for (const auto& rec : j.at("records")) {
    VerificationRecord v;
    v.identity_id = rec.at("identity_id").get<std::string>();
    v.graph_label = rec.at("graph_label").get<std::string>();
    v.predicted = detail::json_number(rec.at("predicted"));
    v.measured = detail::json_number(rec.at("measured"));
    v.scale = detail::json_number(rec.at("scale"));
    v.abs_error = detail::json_number(rec.at("abs_error"));
    v.rel_error = detail::json_number(rec.at("rel_error"));
    v.status = status_from_string(rec.at("status").get<std::string>());
    r.records.push_back(std::move(v));
  }
  return r;
}

inline std::string format_text(const Report& r) {
  using detail::format_number;
  using detail::pad;
  std::size_t graph_w = 5, id_w = 8;
  for (const auto& rec : r.records) {
    graph_w = std::max(graph_w, rec.graph_label.size());
    id_w = std::max(id_w, rec.identity_id.size());
  }
  std::string out;
  out += "graph: " + r.graph.label + "  n=" + std::to_string(r.graph.n) + "  m=" + std::to_string(r.graph.m) + "\n";
  out += "config: tol=" + format_number(r.config.tolerance, 9) + "  max_n=" + std::to_string(r.config.max_n) +
         "  automorphism_cap=" + std::to_string(r.config.automorphism_cap) + "\n";
  out += pad("graph", graph_w + 2) + pad("identity", id_w + 2) + pad("predicted", 17) + pad("measured", 17) +
         pad("abs_error", 17) + pad("rel_error", 17) + "status\n";
  std::size_t counts[3] = {0, 0, 0};
  for (const auto& rec : r.records) {
    out += pad(rec.graph_label, graph_w + 2) + pad(rec.identity_id, id_w + 2) + pad(format_number(rec.predicted, 9), 17) +
           pad(format_number(rec.measured, 9), 17) + pad(format_number(rec.abs_error, 9), 17) +
           pad(format_number(rec.rel_error, 9), 17) + to_string(rec.status) + "\n";
    ++counts[static_cast<int>(rec.status)];
  }
  out += "summary: " + std::to_string(counts[0]) + " match, " + std::to_string(counts[1]) + " mismatch, " +
         std::to_string(counts[2]) + " not-applicable\n";
  return out;
}

}  // namespace hsg
