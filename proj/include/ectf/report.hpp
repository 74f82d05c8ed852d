#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ectf/verify.hpp"
#include "json.hpp"

namespace ectf {

struct PropertyEntry {
  std::string name;
  bool holds = false;
  std::optional<Witness> witness;
  double millis = 0.0;
};

// Certification result for one graph. Properties appear in evaluation order.
struct PropertyReport {
  std::size_t order = 0;
  std::size_t edges = 0;
  std::vector<PropertyEntry> properties;
  std::optional<int> circular;  // n when g is isomorphic to O_{3n-1}
  bool is_3ectf = false;
  std::string reason;  // first failed 3ECTF condition, empty when it holds

  const PropertyEntry* find(std::string_view name) const {
    for (const auto& p : properties)
      if (p.name == name) return &p;
    return nullptr;
  }

  bool holds(std::string_view name) const {
    const auto* p = find(name);
    return p != nullptr && p->holds;
  }
};

namespace report_detail {

template <class F>
PropertyEntry timed(std::string name, F&& check) {
  const auto start = std::chrono::steady_clock::now();
  CheckResult r = check();
  const auto stop = std::chrono::steady_clock::now();
  return {std::move(name), r.holds, std::move(r.witness),
          std::chrono::duration<double, std::milli>(stop - start).count()};
}

inline std::string join(const std::vector<Vertex>& vs) {
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(vs[i]);
  }
  return out;
}

}  // namespace report_detail

inline std::string describe(const Witness& w) {
  using report_detail::join;
  switch (w.kind) {
    case Witness::Kind::extension:
      return std::string("extension A={") + join(w.a) + "} B={" + join(w.b) + "}";
    case Witness::Kind::circular:
      return "circular n=" + std::to_string(w.n);
    default:
      return std::string(to_string(w.kind)) + " {" + join(w.a) + "}";
  }
}

// Fills `report` with the three conditions that characterize 3ECTF graphs
// among finite triangle-free graphs, given the triangle/Adj_3/twin entries.
inline void conclude_3ectf(PropertyReport& report, const Graph& g) {
  const auto* tf = report.find("triangle_free");
  const auto* adj = report.find("adj_3");
  const auto* twin = report.find("twin_free");
  report.circular = recognize_circular(g);
  if (!tf->holds) {
    report.reason = "not triangle-free: " + describe(*tf->witness);
  } else if (!adj->holds) {
    report.reason = "Adj_3 fails: " + describe(*adj->witness);
  } else if (!twin->holds) {
    report.reason = "has twins: " + describe(*twin->witness);
  } else if (report.circular) {
    report.reason = "isomorphic to O_{3n-1}, n=" + std::to_string(*report.circular);
  }
  report.is_3ectf = report.reason.empty();
}

// Triangle-free, Adj_3, twin-free and not circular.
inline PropertyReport is_3ectf(const Graph& g, const ExecOptions& opt = {}) {
  PropertyReport r;
  r.order = g.order();
  r.edges = g.edge_count();
  r.properties.push_back(report_detail::timed("triangle_free", [&] { return is_triangle_free(g, opt); }));
  r.properties.push_back(report_detail::timed("adj_3", [&] { return satisfies_adj_k(g, 3, opt); }));
  r.properties.push_back(report_detail::timed("twin_free", [&] { return is_twin_free(g, opt); }));
  conclude_3ectf(r, g);
  return r;
}

struct ReportOptions {
  int k_max = 3;
  ExecOptions exec;
};

// Full report: basic properties, Adj_k and definitional E_k for k <= k_max,
// circular recognition, and the 3ECTF verdict.
inline PropertyReport certify(const Graph& g, const ReportOptions& opt = {}) {
  if (opt.k_max < 1) throw ParameterError("k_max must be >= 1");
  PropertyReport r;
  r.order = g.order();
  r.edges = g.edge_count();
  auto& ps = r.properties;
  ps.push_back(report_detail::timed("triangle_free", [&] { return is_triangle_free(g, opt.exec); }));
  ps.push_back(report_detail::timed("twin_free", [&] { return is_twin_free(g, opt.exec); }));
  ps.push_back(report_detail::timed("anti_triangle", [&] { return has_anti_triangle(g); }));
  ps.push_back(report_detail::timed("maximal_triangle_free",
                                    [&] { return is_maximal_triangle_free(g, opt.exec); }));
  for (int k = 1; k <= std::max(opt.k_max, 3); ++k)
    ps.push_back(report_detail::timed("adj_" + std::to_string(k),
                                      [&] { return satisfies_adj_k(g, k, opt.exec); }));
  for (int k = 1; k <= opt.k_max; ++k)
    ps.push_back(report_detail::timed("e_" + std::to_string(k),
                                      [&] { return satisfies_e_k(g, k, opt.exec); }));
  conclude_3ectf(r, g);
  return r;
}

// --- serialization ------------------------------------------------------------

// One property per line: name=<p> verdict=<true|false> witness=<...> millis=<t>
inline std::string to_text(const PropertyReport& r, bool include_timing = true) {
  std::ostringstream out;
  out << "order=" << r.order << " edges=" << r.edges << '\n';
  for (const auto& p : r.properties) {
    out << "name=" << p.name << " verdict=" << (p.holds ? "true" : "false") << " witness=";
    out << (p.witness ? "\"" + describe(*p.witness) + "\"" : std::string("-"));
    if (include_timing) {
      std::ostringstream ms;
      ms.setf(std::ios::fixed);
      ms.precision(3);
      ms << p.millis;
      out << " millis=" << ms.str();
    }
    out << '\n';
  }
  out << "name=circular verdict=" << (r.circular ? "true" : "false")
      << " witness=" << (r.circular ? "\"n=" + std::to_string(*r.circular) + "\"" : std::string("-"))
      << '\n';
  out << "name=is_3ectf verdict=" << (r.is_3ectf ? "true" : "false")
      << " witness=" << (r.reason.empty() ? std::string("-") : "\"" + r.reason + "\"") << '\n';
  return out.str();
}

inline nlohmann::ordered_json to_json(const Witness& w) {
  nlohmann::ordered_json j;
  j["kind"] = to_string(w.kind);
  j["a"] = w.a;
  if (w.kind == Witness::Kind::extension) j["b"] = w.b;
  if (w.k > 0) j["k"] = w.k;
  if (w.kind == Witness::Kind::circular) j["n"] = w.n;
  return j;
}

// Timing is excluded unless requested so identical runs give identical bytes.
inline nlohmann::ordered_json to_json(const PropertyReport& r, bool include_timing = false) {
  nlohmann::ordered_json j;
  j["order"] = r.order;
  j["edges"] = r.edges;
  auto props = nlohmann::ordered_json::array();
  for (const auto& p : r.properties) {
    nlohmann::ordered_json e;
    e["name"] = p.name;
    e["holds"] = p.holds;
    e["witness"] = p.witness ? to_json(*p.witness) : nlohmann::ordered_json(nullptr);
    if (include_timing) e["millis"] = p.millis;
    props.push_back(std::move(e));
  }
  j["properties"] = std::move(props);
  j["circular"] = r.circular ? nlohmann::ordered_json(*r.circular) : nlohmann::ordered_json(nullptr);
  j["is_3ectf"] = r.is_3ectf;
  j["reason"] = r.reason;
  return j;
}

inline nlohmann::ordered_json to_json(const MultiplicityResult& m) {
  nlohmann::ordered_json j;
  j["k"] = m.k;
  j["value"] = m.value ? nlohmann::ordered_json(*m.value) : nlohmann::ordered_json(nullptr);
  j["witness"] = m.witness;
  j["mode"] = m.sampled ? "sample" : "exact";
  if (m.sampled) {
    j["samples"] = m.samples;
    j["bound"] = "upper";
    j["rng"] = std::string(kRngAlgorithm);
  }
  return j;
}

}  // namespace ectf
