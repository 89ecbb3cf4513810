#pragma once

#include "superheap/supergraph.hpp"

#include <algorithm>
#include <compare>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace superheap {

struct Piece {
  Vertex position;
  int level;
  auto operator<=>(const Piece& o) const {
    if (auto c = level <=> o.level; c != 0) return c;
    return position <=> o.position;
  }
  bool operator==(const Piece&) const = default;
};

// Drops letter b onto the standard word `st` and keeps it standard. Returns
// the sign picked up by moving an odd letter past odd letters it commutes
// with, which is the structure constant of the product in the enveloping
// algebra of the Lie superalgebra.
inline int drop_letter(const Supergraph& g, Word& st, Vertex b) {
  std::size_t n = st.size();
  std::size_t lo = n;
  VertexMask blockers = g.concurrent_mask(b);
  while (lo > 0 && !((blockers >> st[lo - 1]) & 1)) --lo;
  std::size_t at = lo;
  while (at < n && b < st[at]) ++at;
  int sign = 1;
  if (g.odd(b))
    for (std::size_t j = at; j < n; ++j)
      if (g.odd(st[j])) sign = -sign;
  st.insert(st.begin() + static_cast<std::ptrdiff_t>(at), b);
  return sign;
}

// True when appending b keeps `st` a standard word.
inline bool appends_standard(const Supergraph& g, const Word& st, Vertex b) {
  VertexMask blockers = g.concurrent_mask(b);
  for (std::size_t p = st.size(); p > 0; --p) {
    Vertex a = st[p - 1];
    if ((blockers >> a) & 1) return true;
    if (b > a) return false;
  }
  return true;
}

class Heap {
 public:
  Heap() = default;
  explicit Heap(const Supergraph& g) : graph_(&g) {}

  // Trusted constructor: `standard` must already be a standard word.
  static Heap from_standard(const Supergraph& g, Word standard) {
    Heap h(g);
    h.st_ = std::move(standard);
    return h;
  }

  const Supergraph& graph() const { return *graph_; }
  const Supergraph* graph_ptr() const { return graph_; }
  const Word& standard_word() const { return st_; }
  std::size_t size() const { return st_.size(); }
  bool empty() const { return st_.empty(); }

  WeightVector weight() const {
    auto w = WeightVector::zero(graph_->size());
    for (Vertex v : st_) w.add(v);
    return w;
  }

  Parity parity() const {
    int odd = 0;
    for (Vertex v : st_) odd += graph_->odd(v);
    return odd % 2 ? Parity::odd : Parity::even;
  }

  // Pieces sorted by (level, position).
  std::vector<Piece> pieces() const {
    std::vector<Piece> out;
    std::vector<int> top(graph_->size(), -1);
    for (Vertex v : st_) {
      int lvl = 0;
      for (VertexMask m = graph_->concurrent_mask(v); m; m &= m - 1) lvl = std::max(lvl, top[__builtin_ctzll(m)] + 1);
      top[v] = lvl;
      out.push_back({v, lvl});
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::string to_string() const { return graph_->format_word(st_); }

  bool operator==(const Heap& o) const { return st_ == o.st_; }
  std::strong_ordering operator<=>(const Heap& o) const {
    return std::lexicographical_compare_three_way(st_.begin(), st_.end(), o.st_.begin(), o.st_.end());
  }

 private:
  const Supergraph* graph_ = nullptr;
  Word st_;
};

struct HeapHash {
  std::size_t operator()(const Word& w) const {
    std::size_t h = 1469598103934665603ull;
    for (Vertex v : w) h = (h ^ v) * 1099511628211ull;
    return h;
  }
  std::size_t operator()(const Heap& e) const { return (*this)(e.standard_word()); }
};

inline void check_letters(const Supergraph& g, const Word& w) {
  for (Vertex v : w)
    if (v >= g.size()) throw DomainError("letter outside the vertex set");
}

inline Heap heap_from_word(const Supergraph& g, const Word& w) {
  check_letters(g, w);
  Word st;
  st.reserve(w.size());
  for (Vertex v : w) drop_letter(g, st, v);
  return Heap::from_standard(g, std::move(st));
}

inline Heap heap_from_word(const Supergraph& g, const std::string& w) { return heap_from_word(g, g.parse_word(w)); }

inline void check_same_graph(const Heap& e, const Heap& f) {
  if (e.graph_ptr() != f.graph_ptr() && !(e.graph() == f.graph())) throw DomainError("heaps live on different graphs");
}

struct SignedHeap {
  Heap heap;
  int sign;
};

inline SignedHeap superpose_signed(const Heap& e, const Heap& f) {
  check_same_graph(e, f);
  Word st = e.standard_word();
  st.reserve(e.size() + f.size());
  int sign = 1;
  for (Vertex v : f.standard_word()) sign *= drop_letter(e.graph(), st, v);
  return {Heap::from_standard(e.graph(), std::move(st)), sign};
}

inline Heap superpose(const Heap& e, const Heap& f) { return superpose_signed(e, f).heap; }

inline const Word& standard_word(const Heap& e) { return e.standard_word(); }

inline std::strong_ordering compare(const Heap& e, const Heap& f) {
  check_same_graph(e, f);
  return e <=> f;
}

// Rebuilds a heap from explicit pieces; rejects piles that are not the
// canonical (grounded, separated) representative.
inline Heap heap_from_pieces(const Supergraph& g, std::vector<Piece> pieces) {
  std::sort(pieces.begin(), pieces.end());
  Word w;
  for (const auto& p : pieces) {
    if (p.position >= g.size()) throw DomainError("piece position outside the vertex set");
    if (p.level < 0) throw DomainError("negative piece level");
    w.push_back(p.position);
  }
  Heap h = heap_from_word(g, w);
  if (h.pieces() != pieces) throw DomainError("pieces do not form a canonical heap");
  return h;
}

// Visits every standard word whose letter counts stay within `cap`
// (including the empty word), depth first in increasing letter order.
template <class Visit>
void for_each_standard_word(const Supergraph& g, const WeightVector& cap, Visit&& visit) {
  check_weight(g, cap);
  Word w;
  std::vector<int> left(cap.counts());
  auto rec = [&](auto&& self) -> void {
    if (!visit(static_cast<const Word&>(w))) return;
    for (Vertex b = 0; b < g.size(); ++b) {
      if (left[b] == 0 || !appends_standard(g, w, b)) continue;
      --left[b];
      w.push_back(b);
      self(self);
      w.pop_back();
      ++left[b];
    }
  };
  rec(rec);
}

// All heaps of weight exactly k, ascending.
inline std::vector<Heap> enumerate_heaps(const Supergraph& g, const WeightVector& k) {
  std::vector<Heap> out;
  std::size_t n = static_cast<std::size_t>(k.height());
  for_each_standard_word(g, k, [&](const Word& w) {
    if (w.size() == n) {
      out.push_back(Heap::from_standard(g, w));
      return false;
    }
    return true;
  });
  return out;
}

}  // namespace superheap
