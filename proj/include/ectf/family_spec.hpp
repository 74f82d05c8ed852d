#pragma once

#include <algorithm>
#include <charconv>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ectf/errors.hpp"
#include "ectf/families.hpp"
#include "ectf/shattered.hpp"

namespace ectf {

// Textual family description: "family-name key=value ...".
//
//   albert-cycles n=5
//   albert-matrix M=identity:4 | M=ones:4x5 | M=<matrix file>
//   erdos-hypercube k=2
//   hypercube-layers k=1 m=4
//   hypercube-ckj k=2 j=1
//   circular n=3
//   twisted-four m0=2 m1=2 m2=2 m3=3
//   twisted-tournament T=t4 m=2
//   twisted-tournament-hypercube T=t4p m=2 k=1
//   cayley dim=4 dists=2,3
//
// Tournaments are "t4", "t4p", "transitive:<v>" or a tournament file path.
// Underscores and hyphens in the family name are interchangeable.
struct FamilySpec {
  std::string family;
  std::map<std::string, std::string> params;

  static FamilySpec parse(const std::string& text) {
    std::istringstream in(text);
    FamilySpec spec;
    if (!(in >> spec.family)) throw ParameterError("empty family spec");
    std::replace(spec.family.begin(), spec.family.end(), '_', '-');
    std::string tok;
    while (in >> tok) {
      const auto eq = tok.find('=');
      if (eq == std::string::npos || eq == 0 || eq + 1 == tok.size())
        throw ParameterError("expected key=value, got '" + tok + "'");
      const auto key = tok.substr(0, eq);
      if (!spec.params.emplace(key, tok.substr(eq + 1)).second)
        throw ParameterError("duplicate parameter '" + key + "'");
    }
    return spec;
  }

  std::string to_string() const {
    std::string out = family;
    for (const auto& [k, v] : params) out += " " + k + "=" + v;
    return out;
  }
};

namespace spec_detail {

inline int to_int(const std::string& key, const std::string& value) {
  int out = 0;
  const auto* end = value.data() + value.size();
  auto [p, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc() || p != end)
    throw ParameterError("parameter " + key + " must be an integer, got '" + value + "'");
  return out;
}

class Params {
 public:
  explicit Params(const FamilySpec& s) : spec_(s) {}

  const std::string& str(const std::string& key) {
    used_.insert(key);
    auto it = spec_.params.find(key);
    if (it == spec_.params.end())
      throw ParameterError(spec_.family + " requires parameter " + key);
    return it->second;
  }

  int integer(const std::string& key) { return to_int(key, str(key)); }

  // Rejects parameters the family does not take.
  void finish() const {
    for (const auto& [k, v] : spec_.params)
      if (!used_.count(k)) throw ParameterError(spec_.family + " does not take parameter " + k);
  }

 private:
  const FamilySpec& spec_;
  std::set<std::string> used_;
};

inline Tournament parse_tournament_arg(const std::string& v) {
  const auto [t4, t4p] = canonical_tournaments();
  if (v == "t4") return t4;
  if (v == "t4p") return t4p;
  if (v.rfind("transitive:", 0) == 0) {
    const int n = to_int("T", v.substr(11));
    if (n < 1) throw ParameterError("transitive tournament order must be >= 1");
    return transitive_tournament(static_cast<std::size_t>(n));
  }
  return parse_tournament(read_text_file(v));
}

inline BitMatrix parse_matrix_arg(const std::string& v) {
  if (v.rfind("identity:", 0) == 0) {
    const int n = to_int("M", v.substr(9));
    if (n < 1) throw ParameterError("identity size must be >= 1");
    return BitMatrix::identity(static_cast<std::size_t>(n));
  }
  if (v.rfind("ones:", 0) == 0) {
    const auto dims = v.substr(5);
    const auto x = dims.find('x');
    if (x == std::string::npos) throw ParameterError("expected ones:<rows>x<cols>");
    const int r = to_int("M", dims.substr(0, x));
    const int c = to_int("M", dims.substr(x + 1));
    if (r < 1 || c < 1) throw ParameterError("matrix dimensions must be >= 1");
    return BitMatrix::filled(static_cast<std::size_t>(r), static_cast<std::size_t>(c), true);
  }
  return parse_matrix(read_text_file(v));
}

inline std::set<int> parse_int_list(const std::string& key, const std::string& v) {
  std::set<int> out;
  std::size_t start = 0;
  while (start <= v.size()) {
    const auto comma = v.find(',', start);
    const auto part = v.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    out.insert(to_int(key, part));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace spec_detail

inline Graph build_family(const FamilySpec& spec) {
  spec_detail::Params p(spec);
  const auto& f = spec.family;
  Graph g = [&]() -> Graph {
    if (f == "albert-cycles") return albert_cycles(p.integer("n"));
    if (f == "albert-matrix") return albert_matrix(spec_detail::parse_matrix_arg(p.str("M")));
    if (f == "erdos-hypercube") return erdos_hypercube(p.integer("k"));
    if (f == "hypercube-layers") return hypercube_layers(p.integer("k"), p.integer("m"));
    if (f == "hypercube-ckj") return hypercube_ckj(p.integer("k"), p.integer("j"));
    if (f == "circular") return circular(p.integer("n"));
    if (f == "twisted-four")
      return twisted_four(p.integer("m0"), p.integer("m1"), p.integer("m2"), p.integer("m3"));
    if (f == "twisted-tournament")
      return twisted_tournament(spec_detail::parse_tournament_arg(p.str("T")), p.integer("m"));
    if (f == "twisted-tournament-hypercube")
      return twisted_tournament_hypercube(spec_detail::parse_tournament_arg(p.str("T")), p.integer("m"),
                                          p.integer("k"));
    if (f == "cayley") {
      DistanceSetSpec d;
      d.dim = p.integer("dim");
      d.dists = spec_detail::parse_int_list("dists", p.str("dists"));
      return build_cayley(d);
    }
    throw ParameterError("unknown family '" + f + "'");
  }();
  p.finish();
  return g;
}

inline Graph build_family(const std::string& text) { return build_family(FamilySpec::parse(text)); }

}  // namespace ectf
