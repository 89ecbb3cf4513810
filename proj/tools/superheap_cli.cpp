#include "superheap/io.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

using namespace superheap;

namespace {

struct Output {
  json doc;
  std::string text;
  int code = 0;
};

Output make(const std::string& command, json inputs) {
  Output o;
  o.doc = {{"command", command}, {"inputs", std::move(inputs)}, {"result", nullptr}, {"certificates", json::object()}};
  return o;
}

GraphInput graph_or_fail(const std::string& path) {
  auto in = load_graph(path);
  if (!in.validation.ok()) {
    const auto& i = in.validation.issues.front();
    throw DomainError("matrix violates condition (" + std::to_string(i.condition) + ") at (" +
                      in.matrix->names()[i.i] + "," + in.matrix->names()[i.j] + "): " + i.message);
  }
  return in;
}

void require_free(const Supergraph& g, const WeightVector& k) {
  if (!is_free_weight(g, k)) throw DomainError("weight " + k.to_string() + " is not free");
}

Output cmd_validate(const std::string& path) {
  auto in = load_graph(path);
  Output o = make("validate", {{"file", path}});
  std::ostringstream t;
  json issues = json::array();
  for (const auto& i : in.validation.issues) {
    issues.push_back({{"condition", i.condition}, {"i", in.matrix->names()[i.i]}, {"j", in.matrix->names()[i.j]},
                      {"message", i.message}});
    t << "violation of condition (" << i.condition << ") at (" << in.matrix->names()[i.i] << ","
      << in.matrix->names()[i.j] << "): " << i.message << "\n";
  }
  json result = {{"ok", in.validation.ok()}, {"has_matrix", in.matrix.has_value()}, {"issues", issues}};
  if (in.validation.ok()) {
    result["graph"] = graph_summary(in.graph);
    if (in.matrix) {
      json d = json::array();
      for (const auto& x : in.validation.symmetrizer) d.push_back(to_string(x));
      o.doc["certificates"]["symmetrizer"] = d;
      t << "symmetrizer D = (";
      for (std::size_t j = 0; j < in.validation.symmetrizer.size(); ++j)
        t << (j ? ", " : "") << to_string(in.validation.symmetrizer[j]);
      t << ")\n";
    }
    const auto& g = in.graph;
    t << "ok: " << g.size() << " vertices, " << g.edges().size() << " edges\n";
    t << "edges:";
    for (auto [a, b] : g.edges()) t << " " << g.name(a) << "-" << g.name(b);
    t << "\n";
    auto list = [&](const char* label, VertexMask m) {
      t << label << ":";
      for (Vertex v = 0; v < g.size(); ++v)
        if ((m >> v) & 1) t << " " << g.name(v);
      t << "\n";
    };
    list("psi", g.psi());
    list("real", g.real_set());
    list("psi0", g.psi0());
  } else {
    o.code = 1;
  }
  o.doc["result"] = result;
  o.text = t.str();
  return o;
}

Output cmd_heaps(const std::string& path, const std::string& weight, const std::string& cls) {
  auto in = graph_or_fail(path);
  const auto& g = in.graph;
  auto k = WeightVector::parse(weight, g.size());
  Output o = make("heaps enumerate", {{"graph", path}, {"weight", k.to_string()}, {"class", cls}});
  json list = json::array();
  std::ostringstream t;
  std::size_t shown = 0, total = 0;
  for (const Heap& e : enumerate_heaps(g, k)) {
    ++total;
    HeapFlags f = e.empty() ? HeapFlags{} : classify(e);
    bool keep = cls == "heap" || (cls == "pyramid" && f.pyramid) || (cls == "super-letter" && f.super_letter) ||
                (cls == "lyndon" && f.lyndon) || (cls == "super-lyndon" && f.super_lyndon);
    if (!keep) continue;
    ++shown;
    json h = to_json(e);
    h["flags"] = {{"pyramid", f.pyramid},     {"admissible_pyramid", f.admissible_pyramid},
                  {"elementary", f.elementary}, {"super_letter", f.super_letter},
                  {"primitive", f.primitive},   {"lyndon", f.lyndon},
                  {"super_lyndon", f.super_lyndon}};
    list.push_back(h);
    t << e.to_string() << "\n";
  }
  o.doc["result"] = {{"count", shown}, {"heaps_of_weight", total}, {"heaps", list}};
  t << shown << " of " << total << " heaps\n";
  o.text = t.str();
  return o;
}

Output cmd_basis_lyndon(const std::string& path, const std::string& weight) {
  auto in = graph_or_fail(path);
  const auto& g = in.graph;
  auto k = WeightVector::parse(weight, g.size());
  require_free(g, k);
  Output o = make("basis lyndon", {{"graph", path}, {"weight", k.to_string()}});
  auto b = lyndon_heap_basis(g, k);
  json els = json::array();
  std::ostringstream t;
  for (const auto& e : b.elements) {
    json el = {{"heap", to_json(e.heap)}, {"monomial", e.monomial.to_string(g)}};
    if (e.heap.size() > 1) {
      auto f = sigma_unchecked(e.heap);
      el["factorization"] = f.left.to_string() + "|" + f.right.to_string();
    }
    el["expansion"] = to_json(e.expansion);
    els.push_back(el);
    t << e.heap.to_string() << "  " << e.monomial.to_string(g) << "\n";
  }
  o.doc["result"] = {{"dimension", b.elements.size()}, {"elements", els}};
  o.doc["certificates"]["rank"] = to_json(g, b.certificate);
  t << "rank " << b.certificate.rank << " of " << b.elements.size() << " (" << b.certificate.method << ", "
    << b.certificate.columns << " heaps)\n";
  o.text = t.str();
  return o;
}

Output cmd_basis_lln(const std::string& path, const std::string& weight, const std::string& base) {
  auto in = graph_or_fail(path);
  const auto& g = in.graph;
  auto k = WeightVector::parse(weight, g.size());
  require_free(g, k);
  Vertex i = g.index_of(base);
  Output o = make("basis lln", {{"graph", path}, {"weight", k.to_string()}, {"base", base}});
  auto b = lln_basis(g, k, i);
  const auto& wg = *b.alphabet.working;
  json els = json::array();
  std::ostringstream t;
  for (const auto& e : b.elements) {
    json letters = json::array();
    for (auto j : e.letters) letters.push_back(b.alphabet.letters[j].to_string());
    els.push_back({{"word", wg.format_word(e.word)},
                   {"letters", letters},
                   {"monomial", e.monomial.to_string(wg)},
                   {"expansion", to_json(e.expansion)}});
    t << wg.format_word(e.word) << "  " << e.monomial.to_string(wg) << "\n";
  }
  json alphabet = json::array();
  for (const auto& l : b.alphabet.letters) alphabet.push_back(l.to_string());
  json order = json::array();
  for (Vertex v : b.alphabet.order) order.push_back(g.name(v));
  o.doc["result"] = {{"dimension", b.elements.size()}, {"working_order", order}, {"alphabet", alphabet},
                     {"elements", els}};
  o.doc["certificates"]["rank"] = to_json(wg, b.certificate);
  t << "rank " << b.certificate.rank << " of " << b.elements.size() << " (" << b.certificate.method << ", "
    << b.certificate.columns << " heaps)\n";
  o.text = t.str();
  return o;
}

Output cmd_mult(const std::string& path, const std::string& weight, const std::string& method) {
  auto in = graph_or_fail(path);
  const auto& g = in.graph;
  auto k = WeightVector::parse(weight, g.size());
  require_free(g, k);
  Output o = make("mult", {{"graph", path}, {"weight", k.to_string()}, {"method", method}});
  MultiplicityEngine me(g);
  auto r = multiplicity_report(me, k);
  json res = {{"weight", k.to_string()}, {"parity", to_string(r.parity)}};
  std::ostringstream t;
  if (method == "recursion") {
    res["mult_recursion"] = r.recursion.str();
    t << r.recursion << "\n";
  } else if (method == "closed") {
    res["mult_closed_form"] = to_string(r.closed_form);
    t << to_string(r.closed_form) << "\n";
  } else {
    res["mult_recursion"] = r.recursion.str();
    res["mult_closed_form"] = to_string(r.closed_form);
    res["agree"] = r.agree();
    t << r.recursion << "\n";
    if (!r.agree()) t << "note: closed form gives " << to_string(r.closed_form) << "; recursion is the reported value\n";
  }
  res["linear_coeff"] = to_string(r.linear_coefficient);
  o.doc["result"] = res;
  o.text = t.str();
  return o;
}

Output cmd_mult_table(const std::string& path, const std::string& cap_text) {
  auto in = graph_or_fail(path);
  const auto& g = in.graph;
  auto cap = WeightVector::parse(cap_text, g.size());
  Output o = make("mult table", {{"graph", path}, {"cap", cap.to_string()}});
  MultiplicityEngine me(g);
  auto table = free_roots_up_to(me, cap);
  json rows = json::array();
  std::ostringstream t;
  for (const auto& e : table.entries) {
    Rational closed = me.closed_form(e.weight);
    rows.push_back({{"weight", e.weight.to_string()},
                    {"parity", to_string(e.parity)},
                    {"mult", e.mult.str()},
                    {"route", e.route},
                    {"closed_form", to_string(closed)},
                    {"agree", closed == Rational(e.mult)}});
    t << e.weight.to_string() << "  " << to_string(e.parity) << "  " << e.mult
      << (closed == Rational(e.mult) ? "" : "  (closed form " + to_string(closed) + ")") << "\n";
  }
  o.doc["result"] = {{"count", table.entries.size()}, {"entries", rows}};
  t << table.entries.size() << " free roots\n";
  o.text = t.str();
  return o;
}

Output cmd_chromatic(const std::string& path, const std::string& weight, const std::string& method) {
  auto in = graph_or_fail(path);
  const auto& g = in.graph;
  auto k = WeightVector::parse(weight, g.size());
  Output o = make("chromatic", {{"graph", path}, {"weight", k.to_string()}, {"method", method}});
  RationalPoly p;
  if (method == "direct") {
    p = k_chromatic_direct(g, k);
  } else if (method == "join") {
    p = k_chromatic_join(g, k);
  } else {
    require_free(g, k);
    HeapCatalog cat(g);
    p = theorem_rhs(g, k, [&](const WeightVector& w) { return BigInt(cat.super_lyndon_count(w)); });
    o.doc["certificates"]["bond_partitions"] = bond_lattice(g, k).size();
    o.doc["certificates"]["mult_source"] = "super Lyndon heap counts";
  }
  o.doc["result"] = {{"coefficients", to_json(p)}, {"expanded", p.to_string()}, {"factored", factored(p)},
                     {"linear_coeff", to_string(p.coefficient(1))}};
  o.text = "factored: " + factored(p) + "\nexpanded: " + p.to_string() + "\n";
  return o;
}

Output cmd_verify_series(const std::string& which, const std::string& path, const std::string& cap_text) {
  auto in = graph_or_fail(path);
  const auto& g = in.graph;
  auto cap = WeightVector::parse(cap_text, g.size());
  Output o = make("verify " + which, {{"graph", path}, {"cap", cap.to_string()}});
  auto r = which == "pbw" ? verify_pbw(g, cap) : verify_cartier_foata(g, cap);
  o.doc["result"] = to_json(r);
  std::ostringstream t;
  if (r.ok) {
    t << which << ": ok (" << r.coefficients_checked << " coefficients)\n";
  } else {
    t << which << ": mismatch at " << r.mismatch->to_string() << " (" << r.lhs << " vs " << r.rhs << ")\n";
    o.code = 2;
  }
  o.text = t.str();
  return o;
}

Output cmd_verify_triangular(const std::string& path, const std::string& weight) {
  auto in = graph_or_fail(path);
  const auto& g = in.graph;
  auto k = WeightVector::parse(weight, g.size());
  Output o = make("verify triangular", {{"graph", path}, {"weight", k.to_string()}});
  HeapCatalog cat(g);
  auto r = verify_triangular(cat, k);
  o.doc["result"] = to_json(r);
  o.text = std::string(r.passed ? "ok" : "FAILED") + ": " + std::to_string(r.checked) + " super Lyndon heaps\n";
  for (const auto& f : r.failures) o.text += "  " + f + "\n";
  if (!r.passed) o.code = 2;
  return o;
}

Output cmd_verify_all(const std::string& path, const std::string& cap_text) {
  auto in = graph_or_fail(path);
  const auto& g = in.graph;
  auto cap = WeightVector::parse(cap_text, g.size());
  Output o = make("verify all", {{"graph", path}, {"cap", cap.to_string()}});
  auto rep = verify_all(g, cap);
  json checks = json::array();
  std::ostringstream t;
  for (const auto& c : rep.checks) {
    checks.push_back(to_json(c));
    t << (c.passed ? "PASS " : "FAIL ") << c.name << " (" << c.checked << " cases)\n";
    for (const auto& f : c.failures) t << "  " << f << "\n";
  }
  json disc = json::array();
  for (const auto& d : rep.discrepancies) {
    disc.push_back({{"weight", d.weight.to_string()},
                    {"mult_recursion", d.recursion.str()},
                    {"mult_closed_form", to_string(d.closed_form)},
                    {"super_lyndon_heaps", d.heap_count}});
    t << "method discrepancy at " << d.weight.to_string() << ": recursion " << d.recursion << ", closed form "
      << to_string(d.closed_form) << ", heaps " << d.heap_count << "\n";
  }
  o.doc["result"] = {{"passed", rep.passed()}, {"checks", checks}, {"method_discrepancies", disc}};
  t << (rep.passed() ? "all checks passed\n" : "some checks FAILED\n");
  o.text = t.str();
  if (!rep.passed()) o.code = 2;
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Heaps of pieces, super Lyndon bases and free-root multiplicities"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  std::optional<long long> seed;
  app.add_flag("--json", as_json, "machine-readable JSON output");
  app.add_option("--seed", seed, "not supported: every computation is deterministic");

  std::string file, graph, weight, cap, cls = "heap", base, method;

  auto* validate = app.add_subcommand("validate", "check a graph or BKM supermatrix file");
  validate->add_option("file", file)->required();

  auto* heaps = app.add_subcommand("heaps", "heap enumeration");
  heaps->require_subcommand(1);
  auto* enumerate = heaps->add_subcommand("enumerate", "list heaps of a weight");
  enumerate->add_option("--graph", graph)->required();
  enumerate->add_option("--weight", weight)->required();
  enumerate->add_option("--class", cls)->check(CLI::IsMember({"heap", "pyramid", "super-letter", "lyndon", "super-lyndon"}));

  auto* basis = app.add_subcommand("basis", "root space bases");
  basis->require_subcommand(1);
  auto* lyndon = basis->add_subcommand("lyndon", "Lyndon heaps basis");
  lyndon->add_option("--graph", graph)->required();
  lyndon->add_option("--weight", weight)->required();
  auto* lln = basis->add_subcommand("lln", "left-normed basis over super-letters");
  lln->add_option("--graph", graph)->required();
  lln->add_option("--weight", weight)->required();
  lln->add_option("--base", base)->required();

  auto* mult = app.add_subcommand("mult", "free root multiplicity");
  mult->require_subcommand(0, 1);
  mult->add_option("--graph", graph);
  mult->add_option("--weight", weight);
  std::string mult_method = "both";
  mult->add_option("--method", mult_method)->check(CLI::IsMember({"recursion", "closed", "both"}));
  auto* table = mult->add_subcommand("table", "all free roots up to a cap");
  table->add_option("--graph", graph)->required();
  table->add_option("--cap", cap)->required();

  auto* chromatic = app.add_subcommand("chromatic", "k-chromatic polynomial");
  chromatic->add_option("--graph", graph)->required();
  chromatic->add_option("--weight", weight)->required();
  std::string chrom_method = "direct";
  chromatic->add_option("--method", chrom_method)->check(CLI::IsMember({"direct", "join", "bond"}));

  auto* verify = app.add_subcommand("verify", "verification suites");
  verify->require_subcommand(1);
  auto* pbw = verify->add_subcommand("pbw", "PBW product identity");
  pbw->add_option("--graph", graph)->required();
  pbw->add_option("--cap", cap)->required();
  auto* cf = verify->add_subcommand("cartier-foata", "heap generating function inversion");
  cf->add_option("--graph", graph)->required();
  cf->add_option("--cap", cap)->required();
  auto* tri = verify->add_subcommand("triangular", "triangularity of the Lyndon heaps basis");
  tri->add_option("--graph", graph)->required();
  tri->add_option("--weight", weight)->required();
  auto* all = verify->add_subcommand("all", "every check over weights up to a cap");
  all->add_option("--graph", graph)->required();
  all->add_option("--cap", cap)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  Output out;
  try {
    if (seed) throw DomainError("--seed is not supported: no computation here uses randomness");
    if (*validate) out = cmd_validate(file);
    else if (*enumerate) out = cmd_heaps(graph, weight, cls);
    else if (*lyndon) out = cmd_basis_lyndon(graph, weight);
    else if (*lln) out = cmd_basis_lln(graph, weight, base);
    else if (*table) out = cmd_mult_table(graph, cap);
    else if (*mult) {
      if (graph.empty() || weight.empty()) throw DomainError("mult needs --graph and --weight");
      out = cmd_mult(graph, weight, mult_method);
    } else if (*chromatic) out = cmd_chromatic(graph, weight, chrom_method);
    else if (*pbw) out = cmd_verify_series("pbw", graph, cap);
    else if (*cf) out = cmd_verify_series("cartier-foata", graph, cap);
    else if (*tri) out = cmd_verify_triangular(graph, weight);
    else if (*all) out = cmd_verify_all(graph, cap);
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const ConsistencyError& e) {
    std::cerr << "internal consistency failure: " << e.what() << "\n";
    return 2;
  }
  if (as_json) std::cout << out.doc.dump(2) << "\n";
  else std::cout << out.text;
  return out.code;
}
