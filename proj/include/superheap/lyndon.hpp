#pragma once

#include "superheap/heap.hpp"

#include <map>
#include <memory>
#include <numeric>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace superheap {

// For each piece j of st(E), the earlier pieces it rests on or beside.
inline std::vector<std::uint64_t> below_masks(const Heap& e) {
  const auto& w = e.standard_word();
  if (w.size() > 64) throw DomainError("heaps with more than 64 pieces are not supported");
  std::vector<std::uint64_t> pred(w.size(), 0);
  for (std::size_t j = 0; j < w.size(); ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (e.graph().concurrent(w[i], w[j])) pred[j] |= std::uint64_t{1} << i;
  return pred;
}

// Calls visit(mask) for every order ideal of E, as a subset of positions in st(E).
template <class Visit>
void for_each_ideal(const Heap& e, Visit&& visit) {
  auto pred = below_masks(e);
  std::size_t n = pred.size();
  auto rec = [&](auto&& self, std::size_t j, std::uint64_t cur) -> void {
    if (j == n) {
      visit(cur);
      return;
    }
    self(self, j + 1, cur);
    if ((pred[j] & cur) == pred[j]) self(self, j + 1, cur | (std::uint64_t{1} << j));
  };
  rec(rec, 0, 0);
}

inline std::uint64_t full_mask(std::size_t n) { return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

inline Word restrict_word(const Word& w, std::uint64_t mask) {
  Word out;
  for (std::size_t j = 0; j < w.size(); ++j)
    if ((mask >> j) & 1) out.push_back(w[j]);
  return out;
}

// E = U ∘ V with U the ideal `mask`; returns the transposed heap V ∘ U.
inline Heap transpose_at(const Heap& e, std::uint64_t mask) {
  const auto& w = e.standard_word();
  Word vu = restrict_word(w, full_mask(w.size()) & ~mask);
  Word u = restrict_word(w, mask);
  vu.insert(vu.end(), u.begin(), u.end());
  return heap_from_word(e.graph(), vu);
}

template <class Visit>
void for_each_proper_transpose(const Heap& e, Visit&& visit) {
  std::uint64_t all = full_mask(e.size());
  for_each_ideal(e, [&](std::uint64_t m) {
    if (m != 0 && m != all) visit(m, transpose_at(e, m));
  });
}

inline bool is_pyramid(const Heap& e) {
  if (e.empty()) return false;
  auto pred = below_masks(e);
  return std::count(pred.begin(), pred.end(), 0u) == 1;
}

inline bool is_primitive(const Heap& e) {
  bool prim = true;
  for_each_proper_transpose(e, [&](std::uint64_t, const Heap& t) {
    if (t == e) prim = false;
  });
  return prim;
}

// Transposition closure of E, searched breadth first; stops early once a
// heap smaller than E turns up when `stop_below` is set.
inline std::vector<Heap> conjugacy_class(const Heap& e, bool stop_below = false) {
  std::vector<Heap> seen{e};
  std::unordered_set<Word, HeapHash> index{e.standard_word()};
  for (std::size_t at = 0; at < seen.size(); ++at) {
    Heap cur = seen[at];
    bool smaller = false;
    for_each_proper_transpose(cur, [&](std::uint64_t, const Heap& t) {
      if (index.insert(t.standard_word()).second) {
        seen.push_back(t);
        if (t < e) smaller = true;
      }
    });
    if (smaller && stop_below) break;
  }
  std::sort(seen.begin(), seen.end());
  return seen;
}

inline bool is_lyndon(const Heap& e) {
  if (e.empty() || !is_primitive(e)) return false;
  return conjugacy_class(e, true).front() == e;
}

// Returns F with E = F ∘ F when such a square root exists.
inline std::optional<Heap> square_root(const Heap& e) {
  if (e.size() % 2) return std::nullopt;
  auto k = e.weight();
  for (int c : k.counts())
    if (c % 2) return std::nullopt;
  const auto& w = e.standard_word();
  std::optional<Heap> root;
  for_each_ideal(e, [&](std::uint64_t m) {
    if (root || static_cast<std::size_t>(popcount(m)) * 2 != w.size()) return;
    Heap u = heap_from_word(e.graph(), restrict_word(w, m));
    Heap v = heap_from_word(e.graph(), restrict_word(w, full_mask(w.size()) & ~m));
    if (u == v) root = u;
  });
  return root;
}

inline bool is_super_lyndon(const Heap& e) {
  if (is_lyndon(e)) return true;
  auto f = square_root(e);
  return f && f->parity() == Parity::odd && is_lyndon(*f);
}

struct HeapFlags {
  bool pyramid = false;
  bool admissible_pyramid = false;
  bool elementary = false;
  bool super_letter = false;
  bool primitive = false;
  bool lyndon = false;
  bool super_lyndon = false;
};

inline HeapFlags classify(const Heap& e) {
  if (e.empty()) throw DomainError("classify needs a nonempty heap");
  HeapFlags f;
  f.pyramid = is_pyramid(e);
  if (f.pyramid) {
    Vertex base = e.standard_word().front();
    f.admissible_pyramid = base == 0;
    f.elementary = std::count(e.standard_word().begin(), e.standard_word().end(), base) == 1;
    f.super_letter = f.admissible_pyramid && f.elementary;
  }
  f.primitive = is_primitive(e);
  f.lyndon = f.primitive && conjugacy_class(e, true).front() == e;
  if (f.lyndon) {
    f.super_lyndon = true;
  } else {
    auto r = square_root(e);
    f.super_lyndon = r && r->parity() == Parity::odd && is_lyndon(*r);
  }
  return f;
}

// Index of the smallest proper suffix of w (lex order, proper prefix smaller).
template <class Seq>
std::size_t smallest_proper_suffix(const Seq& w) {
  std::size_t best = 1;
  for (std::size_t j = 2; j < w.size(); ++j)
    if (std::lexicographical_compare(w.begin() + static_cast<std::ptrdiff_t>(j), w.end(),
                                     w.begin() + static_cast<std::ptrdiff_t>(best), w.end()))
      best = j;
  return best;
}

struct Factorization {
  Heap left;
  Heap right;
};

// Σ without the super Lyndon check; E must have at least two pieces.
inline Factorization sigma_unchecked(const Heap& e) {
  if (auto r = square_root(e); r && r->parity() == Parity::odd && is_lyndon(*r)) return {*r, *r};
  const Word& w = e.standard_word();
  std::size_t cut = smallest_proper_suffix(w);
  Word u(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(cut));
  Word v(w.begin() + static_cast<std::ptrdiff_t>(cut), w.end());
  return {heap_from_word(e.graph(), u), heap_from_word(e.graph(), v)};
}

inline Factorization standard_factorization(const Heap& e) {
  if (e.size() < 2) throw DomainError("standard factorization needs at least two pieces");
  if (!is_super_lyndon(e)) throw DomainError("heap " + e.to_string() + " is not super Lyndon");
  return sigma_unchecked(e);
}

// Per-weight analysis of all heaps: conjugacy classes via union-find over
// transpositions, primitivity, Lyndon flags.
struct WeightClass {
  std::vector<Heap> heaps;
  std::vector<char> primitive;
  std::vector<char> lyndon;
  std::vector<Heap> lyndon_heaps() const {
    std::vector<Heap> out;
    for (std::size_t j = 0; j < heaps.size(); ++j)
      if (lyndon[j]) out.push_back(heaps[j]);
    return out;
  }
};

inline WeightClass analyze_weight(const Supergraph& g, const WeightVector& k) {
  WeightClass wc;
  wc.heaps = enumerate_heaps(g, k);
  std::size_t n = wc.heaps.size();
  std::unordered_map<Word, std::size_t, HeapHash> index;
  index.reserve(n * 2);
  for (std::size_t j = 0; j < n; ++j) index.emplace(wc.heaps[j].standard_word(), j);
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  wc.primitive.assign(n, 1);
  for (std::size_t j = 0; j < n; ++j) {
    for_each_proper_transpose(wc.heaps[j], [&](std::uint64_t, const Heap& t) {
      std::size_t o = index.at(t.standard_word());
      if (o == j) wc.primitive[j] = 0;
      std::size_t a = find(j), b = find(o);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    });
  }
  wc.lyndon.assign(n, 0);
  for (std::size_t j = 0; j < n; ++j) wc.lyndon[j] = wc.primitive[j] && find(j) == j;
  return wc;
}

// Memoized weight-class analyses for one graph. Not thread safe; one
// catalog per worker.
class HeapCatalog {
 public:
  explicit HeapCatalog(const Supergraph& g) : g_(&g) {}

  const Supergraph& graph() const { return *g_; }

  const WeightClass& at(const WeightVector& k) {
    check_weight(*g_, k);
    auto it = cache_.find(k);
    if (it == cache_.end()) it = cache_.emplace(k, analyze_weight(*g_, k)).first;
    return it->second;
  }

  std::vector<Heap> super_lyndon(const WeightVector& k) {
    if (k.is_zero()) return {};
    std::vector<Heap> out = at(k).lyndon_heaps();
    if (k.gcd() % 2 == 0) {
      auto half = k.divided_by(2);
      if (g_->parity(half) == Parity::odd)
        for (const Heap& f : at(half).lyndon_heaps()) out.push_back(superpose(f, f));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::size_t super_lyndon_count(const WeightVector& k) {
    if (k.is_zero()) return 0;
    std::size_t c = lyndon_count(k);
    if (k.gcd() % 2 == 0) {
      auto half = k.divided_by(2);
      if (g_->parity(half) == Parity::odd) c += lyndon_count(half);
    }
    return c;
  }

 private:
  std::size_t lyndon_count(const WeightVector& k) {
    const auto& wc = at(k);
    return static_cast<std::size_t>(std::count(wc.lyndon.begin(), wc.lyndon.end(), 1));
  }

  const Supergraph* g_;
  std::map<WeightVector, WeightClass> cache_;
};

inline std::vector<Heap> enumerate_super_lyndon_heaps(const Supergraph& g, const WeightVector& k) {
  HeapCatalog cat(g);
  return cat.super_lyndon(k);
}

}  // namespace superheap
