#pragma once

#include "superheap/verify.hpp"

#include <json.hpp>

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace superheap {

using json = nlohmann::ordered_json;

struct GraphInput {
  Supergraph graph;
  std::optional<BkmSupermatrix> matrix;
  ValidationReport validation;
};

namespace detail {

inline std::string scalar_name(const json& j, const char* what) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw DomainError(std::string("expected a vertex name in ") + what);
}

inline std::vector<std::string> name_list(const json& j, const char* what) {
  if (!j.is_array()) throw DomainError(std::string("field '") + what + "' must be an array");
  std::vector<std::string> out;
  for (const auto& x : j) out.push_back(scalar_name(x, what));
  return out;
}

inline Rational entry(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw DomainError("matrix entries must be integers or strings \"p/q\"");
}

}  // namespace detail

// Reads the graph document. With a `matrix` field the graph is the
// quasi-Dynkin diagram of the validated matrix; an invalid matrix is
// reported through `validation` and leaves the graph empty.
inline GraphInput parse_graph(const json& doc) {
  if (!doc.is_object()) throw DomainError("graph document must be a JSON object");
  if (!doc.contains("vertices")) throw DomainError("graph document needs 'vertices'");
  auto vertices = detail::name_list(doc.at("vertices"), "vertices");
  std::vector<std::string> psi = doc.contains("psi") ? detail::name_list(doc.at("psi"), "psi") : std::vector<std::string>{};
  for (const auto& key : doc.items())
    if (key.key() != "vertices" && key.key() != "edges" && key.key() != "psi" && key.key() != "matrix")
      throw DomainError("unknown field '" + key.key() + "'");
  if (doc.contains("matrix")) {
    if (doc.contains("edges")) throw DomainError("'edges' must be absent when 'matrix' is given");
    const auto& m = doc.at("matrix");
    if (!m.is_array()) throw DomainError("'matrix' must be an array of rows");
    std::vector<std::vector<Rational>> rows;
    for (const auto& row : m) {
      if (!row.is_array()) throw DomainError("'matrix' rows must be arrays");
      std::vector<Rational> r;
      for (const auto& x : row) r.push_back(detail::entry(x));
      rows.push_back(std::move(r));
    }
    BkmSupermatrix a(vertices, std::move(rows), psi);
    GraphInput in{{}, a, validate_supermatrix(a)};
    if (in.validation.ok()) in.graph = quasi_dynkin(a);
    return in;
  }
  std::vector<std::pair<std::string, std::string>> edges;
  if (doc.contains("edges")) {
    if (!doc.at("edges").is_array()) throw DomainError("'edges' must be an array");
    for (const auto& e : doc.at("edges")) {
      auto ends = detail::name_list(e, "edges");
      if (ends.size() != 2) throw DomainError("each edge needs exactly two endpoints");
      edges.emplace_back(ends[0], ends[1]);
    }
  }
  return {Supergraph(vertices, edges, psi), std::nullopt, {}};
}

inline GraphInput load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw DomainError("'" + path + "' is not valid JSON: " + e.what());
  }
  return parse_graph(doc);
}

inline json to_json(const Rational& r) { return to_string(r); }

inline json to_json(const RationalPoly& p) {
  json a = json::array();
  for (const auto& c : p.coefficients()) a.push_back(to_string(c));
  return a;
}

inline json to_json(const Supergraph& g, const WeightVector& k) {
  json o = json::object();
  for (Vertex v = 0; v < g.size(); ++v) o[g.name(v)] = k[v];
  return o;
}

inline json to_json(const Heap& e) {
  json pieces = json::array();
  for (const auto& p : e.pieces()) pieces.push_back(json::array({e.graph().name(p.position), p.level}));
  return {{"word", e.to_string()}, {"pieces", pieces}};
}

inline json to_json(const HeapPolynomial& p) {
  json a = json::array();
  for (const auto& [w, c] : p.terms()) a.push_back({{"coeff", c}, {"heap", to_json(Heap::from_standard(p.graph(), w))}});
  return a;
}

inline json to_json(const Supergraph& g, const RankCertificate& c) {
  json piv = json::array();
  for (const auto& w : c.pivots) piv.push_back(g.format_word(w));
  return {{"rows", c.rows},     {"columns", c.columns}, {"rank", c.rank},
          {"full_row_rank", c.full_row_rank()}, {"method", c.method}, {"pivots", piv}};
}

inline json to_json(const SeriesReport& r) {
  json o = {{"ok", r.ok}, {"coefficients_checked", r.coefficients_checked}};
  if (r.mismatch) o["first_mismatch"] = {{"weight", r.mismatch->to_string()}, {"lhs", r.lhs.str()}, {"rhs", r.rhs.str()}};
  return o;
}

inline json to_json(const CheckResult& c) {
  return {{"name", c.name}, {"passed", c.passed}, {"checked", c.checked}, {"failures", c.failures}};
}

inline json graph_summary(const Supergraph& g) {
  json edges = json::array();
  for (auto [a, b] : g.edges()) edges.push_back(json::array({g.name(a), g.name(b)}));
  auto names = [&](VertexMask m) {
    json a = json::array();
    for (Vertex v = 0; v < g.size(); ++v)
      if ((m >> v) & 1) a.push_back(g.name(v));
    return a;
  };
  return {{"vertices", g.names()}, {"edges", edges},        {"psi", names(g.psi())},
          {"real_set", names(g.real_set())}, {"psi0", names(g.psi0())}};
}

// Writes p as c * Π (q - r)^m over its integer roots, keeping any leftover
// factor in expanded form.
inline std::string factored(const RationalPoly& p) {
  if (p.is_zero()) return "0";
  RationalPoly rest = p;
  std::vector<std::pair<BigInt, int>> roots;
  int bound = p.degree() + 1;
  for (int r = -bound; r <= bound; ++r) {
    int mult = 0;
    while (rest.degree() > 0 && rest(Rational(r)) == 0) {
      // synthetic division by (q - r)
      const auto& c = rest.coefficients();
      std::vector<Rational> quot(c.size() - 1);
      Rational carry = 0;
      for (std::size_t j = c.size(); j-- > 1;) {
        carry = c[j] + carry * r;
        quot[j - 1] = carry;
      }
      rest = RationalPoly(std::move(quot));
      ++mult;
    }
    if (mult) roots.emplace_back(r, mult);
  }
  std::string s;
  Rational lead = rest.coefficient(rest.degree());
  if (rest.degree() == 0) {
    if (lead != 1) s += to_string(lead) + (roots.empty() ? "" : "*");
  } else {
    s += "(" + rest.to_string() + ")" + (roots.empty() ? "" : "*");
  }
  bool first = true;
  for (auto& [r, m] : roots) {
    if (!first) s += "*";
    first = false;
    std::string f = r == 0 ? "q" : (r > 0 ? "(q-" + r.str() + ")" : "(q+" + BigInt(-r).str() + ")");
    s += f + (m > 1 ? "^" + std::to_string(m) : "");
  }
  return s.empty() ? "1" : s;
}

}  // namespace superheap
