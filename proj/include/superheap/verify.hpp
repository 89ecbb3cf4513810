#pragma once

#include "superheap/bases.hpp"
#include "superheap/multiplicity.hpp"

#include <optional>
#include <string>
#include <vector>

namespace superheap {

struct CheckResult {
  explicit CheckResult(std::string n) : name(std::move(n)) {}

  std::string name;
  bool passed = true;
  std::size_t checked = 0;
  std::vector<std::string> failures;  // first few offending cases

  void fail(std::string what) {
    passed = false;
    if (failures.size() < 10) failures.push_back(std::move(what));
  }
};

// Coefficient of L in expand(Λ(L)) is 1, or 2 for an odd square, and no
// supporting heap lies below L.
inline bool is_triangular(const Heap& l, const HeapPolynomial& expansion, std::string* why = nullptr) {
  auto root = square_root(l);
  std::int64_t want = root && root->parity() == Parity::odd ? 2 : 1;
  std::int64_t got = expansion.coefficient(l);
  if (got != want) {
    if (why) *why = "self-coefficient " + std::to_string(got) + ", expected " + std::to_string(want);
    return false;
  }
  if (expansion.terms().begin()->first != l.standard_word()) {
    if (why) *why = "support reaches below the heap";
    return false;
  }
  return true;
}

inline CheckResult verify_triangular(HeapCatalog& cat, const WeightVector& k) {
  CheckResult r("triangular " + k.to_string());
  for (const Heap& l : cat.super_lyndon(k)) {
    std::string why;
    ++r.checked;
    if (!is_triangular(l, expand_monomial(cat.graph(), lambda_unchecked(l)), &why))
      r.fail(l.to_string() + ": " + why);
  }
  return r;
}

// Σ(E) by exhaustive search: the decomposition E = F ∘ N with N Lyndon and
// minimal in heap order.
inline std::optional<Factorization> brute_force_sigma(const Heap& e) {
  std::optional<Factorization> best;
  const Word& w = e.standard_word();
  std::uint64_t all = full_mask(w.size());
  for_each_ideal(e, [&](std::uint64_t m) {
    if (m == 0 || m == all) return;
    Heap n = heap_from_word(e.graph(), restrict_word(w, all & ~m));
    if (best && !(n < best->right)) return;
    if (!is_lyndon(n)) return;
    best = Factorization{heap_from_word(e.graph(), restrict_word(w, m)), n};
  });
  return best;
}

struct SuiteOptions {
  // Bases are built for weights of at most this height.
  int basis_height = 12;
  // Brute-force Σ search runs on Lyndon heaps of at most this many pieces.
  int sigma_pieces = 8;
};

struct Discrepancy {
  WeightVector weight;
  BigInt recursion;
  Rational closed_form;
  std::size_t heap_count;
};

struct SuiteReport {
  std::vector<CheckResult> checks;
  std::vector<Discrepancy> discrepancies;
  bool passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
};

// Every module oracle over the free weights up to cap. The multiplicity
// recursion is the ground truth; closed-form disagreements are listed, not failed.
inline SuiteReport verify_all(const Supergraph& g, const WeightVector& cap, const SuiteOptions& opt = {}) {
  check_weight(g, cap);
  SuiteReport rep;
  HeapCatalog cat(g);
  MultiplicityEngine me(g);

  CheckResult pbw("pbw");
  auto p = verify_pbw(cat, cap);
  pbw.checked = p.coefficients_checked;
  if (!p.ok) pbw.fail("coefficient at " + p.mismatch->to_string() + ": " + p.lhs.str() + " vs " + p.rhs.str());
  rep.checks.push_back(pbw);

  CheckResult cf("cartier-foata");
  auto c = verify_cartier_foata(g, cap);
  cf.checked = c.coefficients_checked;
  if (!c.ok) cf.fail("coefficient at " + c.mismatch->to_string() + ": " + c.lhs.str() + " vs " + c.rhs.str());
  rep.checks.push_back(cf);

  CheckResult chrom("chromatic direct = join");
  CheckResult bond("bond lattice = chromatic");
  CheckResult dims("dimension triangle");
  CheckResult tri("triangularity");
  CheckResult sig("sigma = brute-force factorization");
  auto heap_mult = [&](const WeightVector& w) { return BigInt(cat.super_lyndon_count(w)); };

  for (const auto& k : weights_up_to(cap)) {
    if (k.is_zero() || !is_free_weight(g, k)) continue;
    auto direct = k_chromatic_direct(g, k);
    ++chrom.checked;
    if (!(direct == k_chromatic_join(g, k))) chrom.fail(k.to_string());
    ++bond.checked;
    if (!(theorem_rhs(g, k, heap_mult) == direct)) bond.fail(k.to_string());

    std::size_t count = cat.super_lyndon_count(k);
    BigInt rec = me.recursion(k);
    ++dims.checked;
    if (rec != count) dims.fail(k.to_string() + ": recursion " + rec.str() + ", heaps " + std::to_string(count));
    if (!is_connected_set(g, k.support())) {
      if (count != 0) dims.fail(k.to_string() + ": super Lyndon heaps on a disconnected support");
      continue;
    }
    Rational closed = me.closed_form(k);
    if (closed != Rational(rec)) rep.discrepancies.push_back({k, rec, closed, count});

    if (k.height() <= opt.basis_height) {
      try {
        auto lb = lyndon_heap_basis(cat, k);
        if (lb.certificate.rank != count) dims.fail(k.to_string() + ": Lyndon heap basis rank");
        for (Vertex i = 0; i < g.size(); ++i) {
          if (!k[i]) continue;
          auto ln = lln_basis(g, k, i);
          if (ln.certificate.rank != count) dims.fail(k.to_string() + ": LLN basis rank at base " + g.name(i));
        }
        for (const auto& el : lb.elements) {
          std::string why;
          ++tri.checked;
          if (!is_triangular(el.heap, el.expansion, &why)) tri.fail(el.heap.to_string() + ": " + why);
        }
      } catch (const ConsistencyError& e) {
        dims.fail(k.to_string() + ": " + e.what());
      }
    }
    if (k.height() <= opt.sigma_pieces) {
      for (const Heap& e : cat.at(k).lyndon_heaps()) {
        if (e.size() < 2) continue;
        ++sig.checked;
        auto fast = sigma_unchecked(e);
        auto slow = brute_force_sigma(e);
        if (!slow || !(slow->left == fast.left) || !(slow->right == fast.right)) sig.fail(e.to_string());
      }
    }
  }
  for (auto* r : {&chrom, &bond, &dims, &tri, &sig}) rep.checks.push_back(*r);
  return rep;
}

}  // namespace superheap
