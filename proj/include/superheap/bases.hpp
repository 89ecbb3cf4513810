#pragma once

#include "superheap/linalg.hpp"

#include <algorithm>
#include <memory>
#include <string>
#include <vector>

namespace superheap {

struct BasisElement {
  Heap heap;
  LieMonomial monomial;
  HeapPolynomial expansion;
};

struct LyndonHeapBasis {
  WeightVector weight;
  std::vector<BasisElement> elements;
  RankCertificate certificate;
};

inline std::vector<HeapPolynomial> expansions_of(const std::vector<BasisElement>& elems) {
  std::vector<HeapPolynomial> out;
  for (const auto& e : elems) out.push_back(e.expansion);
  return out;
}

inline void require_full_rank(const RankCertificate& cert, const std::string& what) {
  if (!cert.full_row_rank())
    throw ConsistencyError(what + ": expansion rank " + std::to_string(cert.rank) + " below basis size " +
                           std::to_string(cert.rows));
}

// Λ(E) for every super Lyndon heap of weight k, with expansions and an exact
// rank certificate. Throws ConsistencyError on rank deficiency.
inline LyndonHeapBasis lyndon_heap_basis(HeapCatalog& cat, const WeightVector& k) {
  const Supergraph& g = cat.graph();
  check_weight(g, k);
  LyndonHeapBasis b{k, {}, {}};
  for (const Heap& e : cat.super_lyndon(k)) {
    LieMonomial m = lambda_unchecked(e);
    b.elements.push_back({e, m, expand_monomial(g, m)});
  }
  b.certificate = rank_certificate(expansions_of(b.elements));
  require_full_rank(b.certificate, "Lyndon heap basis at weight " + k.to_string());
  return b;
}

inline LyndonHeapBasis lyndon_heap_basis(const Supergraph& g, const WeightVector& k) {
  HeapCatalog cat(g);
  return lyndon_heap_basis(cat, k);
}

// Super-letters with a fixed base, living on the relabeled graph in which the
// base is the smallest vertex.
struct SuperLetterAlphabet {
  std::shared_ptr<const Supergraph> working;
  Vertex base = 0;                 // in the original graph
  std::vector<Vertex> order;       // order[j] = original vertex at working position j
  std::vector<Vertex> position;    // inverse of order
  std::vector<Heap> letters;       // ascending

  Vertex to_working(Vertex v) const { return position.at(v); }
  Vertex to_original(Vertex v) const { return order.at(v); }
  Word to_working(const Word& w) const {
    Word out;
    for (Vertex v : w) out.push_back(to_working(v));
    return out;
  }
  WeightVector to_working(const WeightVector& k) const {
    std::vector<int> c(k.size());
    for (Vertex v = 0; v < k.size(); ++v) c[position[v]] = k[v];
    return WeightVector(std::move(c));
  }
};

inline SuperLetterAlphabet make_working_frame(const Supergraph& g, Vertex base) {
  if (base >= g.size()) throw DomainError("base vertex outside the vertex set");
  SuperLetterAlphabet a;
  a.base = base;
  a.working = std::make_shared<const Supergraph>(g.with_first(base));
  a.order.push_back(base);
  for (Vertex v = 0; v < g.size(); ++v)
    if (v != base) a.order.push_back(v);
  a.position.assign(g.size(), 0);
  for (Vertex j = 0; j < g.size(); ++j) a.position[a.order[j]] = j;
  return a;
}

inline SuperLetterAlphabet super_letter_alphabet(const Supergraph& g, Vertex base, const WeightVector& cap) {
  check_weight(g, cap);
  SuperLetterAlphabet a = make_working_frame(g, base);
  const Supergraph& wg = *a.working;
  WeightVector wcap = a.to_working(cap);
  if (wcap[0] == 0) return a;
  std::vector<int> left(wcap.counts());
  left[0] = 0;
  Word w{0};
  VertexMask touched = wg.concurrent_mask(0);
  auto rec = [&](auto&& self) -> void {
    a.letters.push_back(Heap::from_standard(wg, w));
    for (Vertex b = 1; b < wg.size(); ++b) {
      if (left[b] == 0 || !((touched >> b) & 1) || !appends_standard(wg, w, b)) continue;
      VertexMask saved = touched;
      --left[b];
      w.push_back(b);
      touched |= wg.concurrent_mask(b);
      self(self);
      touched = saved;
      w.pop_back();
      ++left[b];
    }
  };
  rec(rec);
  std::sort(a.letters.begin(), a.letters.end());
  return a;
}

template <class Seq>
bool is_lyndon_sequence(const Seq& s) {
  std::size_t n = s.size();
  if (n == 0) return false;
  for (std::size_t r = 1; r < n; ++r) {
    // compare s with its rotation starting at r
    for (std::size_t j = 0; j < n; ++j) {
      auto a = s[j], b = s[(r + j) % n];
      if (a < b) break;
      if (a > b) return false;
      if (j + 1 == n) return false;  // equal rotation: periodic
    }
  }
  return true;
}

struct LlnElement {
  std::vector<std::size_t> letters;  // indices into the alphabet
  Word word;                         // concatenated standard words, working labels
  LieMonomial monomial;              // leaves use working labels
  HeapPolynomial expansion;          // on the working graph
};

struct LlnBasis {
  SuperLetterAlphabet alphabet;
  WeightVector weight;  // original labels
  std::vector<LlnElement> elements;
  RankCertificate certificate;
};

inline Parity sequence_parity(const SuperLetterAlphabet& a, const std::vector<std::size_t>& s) {
  Parity p = Parity::even;
  for (auto j : s) p = p + a.letters[j].parity();
  return p;
}

inline bool is_super_lyndon_sequence(const SuperLetterAlphabet& a, const std::vector<std::size_t>& s) {
  if (is_lyndon_sequence(s)) return true;
  if (s.size() % 2) return false;
  std::vector<std::size_t> u(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(s.size() / 2));
  if (!std::equal(u.begin(), u.end(), s.begin() + static_cast<std::ptrdiff_t>(u.size()))) return false;
  return is_lyndon_sequence(u) && sequence_parity(a, u) == Parity::odd;
}

// L(w) with each letter realized as e(st(letter)).
inline LieMonomial lln_monomial(const SuperLetterAlphabet& a, const std::vector<std::size_t>& s) {
  if (s.size() == 1) return left_normed(a.letters[s[0]].standard_word());
  std::size_t cut;
  if (!is_lyndon_sequence(s)) {
    cut = s.size() / 2;
  } else {
    cut = smallest_proper_suffix(s);
  }
  std::vector<std::size_t> u(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(cut));
  std::vector<std::size_t> v(s.begin() + static_cast<std::ptrdiff_t>(cut), s.end());
  return LieMonomial::bracket(lln_monomial(a, u), lln_monomial(a, v));
}

inline std::vector<std::vector<std::size_t>> super_lyndon_sequences(const SuperLetterAlphabet& a,
                                                                    const WeightVector& wk) {
  std::vector<WeightVector> lw;
  for (const auto& l : a.letters) lw.push_back(l.weight());
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, const WeightVector& rem) -> void {
    if (rem.is_zero()) {
      if (is_super_lyndon_sequence(a, cur)) out.push_back(cur);
      return;
    }
    if (rem[0] == 0) return;
    for (std::size_t j = 0; j < a.letters.size(); ++j) {
      if (!lw[j].fits_in(rem)) continue;
      cur.push_back(j);
      self(self, rem - lw[j]);
      cur.pop_back();
    }
  };
  rec(rec, wk);
  std::sort(out.begin(), out.end());
  return out;
}

inline LlnBasis lln_basis(const Supergraph& g, const WeightVector& k, Vertex base) {
  check_weight(g, k);
  if (base >= g.size() || k[base] == 0)
    throw DomainError("base vertex " + (base < g.size() ? g.name(base) : std::to_string(base)) +
                      " is not in the support of the weight");
  LlnBasis b{super_letter_alphabet(g, base, k), k, {}, {}};
  const Supergraph& wg = *b.alphabet.working;
  for (auto& s : super_lyndon_sequences(b.alphabet, b.alphabet.to_working(k))) {
    Word word;
    for (auto j : s) {
      const Word& st = b.alphabet.letters[j].standard_word();
      word.insert(word.end(), st.begin(), st.end());
    }
    LieMonomial m = lln_monomial(b.alphabet, s);
    b.elements.push_back({s, word, m, expand_monomial(wg, m)});
  }
  std::vector<HeapPolynomial> ex;
  for (const auto& e : b.elements) ex.push_back(e.expansion);
  b.certificate = rank_certificate(ex);
  require_full_rank(b.certificate, "LLN basis at weight " + k.to_string());
  return b;
}

// a_1 < a_r <= a_{r-1} <= ... <= a_2 on st(E); a single piece qualifies.
inline bool lambda_equals_e(const Heap& e) {
  if (e.empty() || !classify(e).super_letter) throw DomainError("heap " + e.to_string() + " is not a super-letter");
  const Word& a = e.standard_word();
  std::size_t r = a.size();
  if (r == 1) return true;
  if (!(a[0] < a[r - 1])) return false;
  for (std::size_t j = 1; j + 1 < r; ++j)
    if (a[j + 1] > a[j]) return false;
  return true;
}

// Exact coordinates of e(w) in an LLN basis; w uses original vertex labels.
inline std::vector<Rational> span_membership(const Word& w, const LlnBasis& b) {
  const Supergraph& wg = *b.alphabet.working;
  Word ww = b.alphabet.to_working(w);
  auto k = WeightVector::zero(wg.size());
  for (Vertex v : ww) k.add(v);
  if (k != b.alphabet.to_working(b.weight)) throw DomainError("word weight differs from the basis weight");
  HeapPolynomial target = expand_monomial(wg, left_normed(ww));
  std::vector<HeapPolynomial> ex;
  for (const auto& e : b.elements) ex.push_back(e.expansion);
  auto x = solve_in_span(ex, target);
  if (!x) throw ConsistencyError("e(w) is not in the span of the basis");
  return *x;
}

}  // namespace superheap
