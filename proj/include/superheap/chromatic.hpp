#pragma once

#include "superheap/polynomial.hpp"
#include "superheap/supergraph.hpp"

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace superheap {

namespace detail {

using IntPoly = std::vector<BigInt>;  // ascending coefficients

inline IntPoly sub(IntPoly a, const IntPoly& b) {
  if (b.size() > a.size()) a.resize(b.size());
  for (std::size_t j = 0; j < b.size(); ++j) a[j] -= b[j];
  return a;
}

inline IntPoly mul_q(IntPoly a) {
  a.insert(a.begin(), BigInt(0));
  return a;
}

// q (q-1) ... (q-n+1)
inline IntPoly falling(std::size_t n) {
  IntPoly r{1};
  for (std::size_t j = 0; j < n; ++j) {
    IntPoly next(r.size() + 1, 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
      next[i + 1] += r[i];
      next[i] -= r[i] * static_cast<long>(j);
    }
    r = std::move(next);
  }
  return r;
}

class DeletionContraction {
 public:
  IntPoly run(std::vector<VertexMask> adj) { return solve(std::move(adj)); }

 private:
  static std::vector<VertexMask> remove_vertex(const std::vector<VertexMask>& adj, std::size_t v) {
    std::vector<VertexMask> out;
    for (std::size_t a = 0; a < adj.size(); ++a) {
      if (a == v) continue;
      VertexMask m = adj[a];
      VertexMask low = m & ((VertexMask{1} << v) - 1);
      VertexMask high = v + 1 < 64 ? (m >> (v + 1)) << v : 0;
      out.push_back(low | high);
    }
    return out;
  }

  IntPoly solve(std::vector<VertexMask> adj) {
    std::size_t n = adj.size();
    if (n == 0) return {1};
    auto it = memo_.find(adj);
    if (it != memo_.end()) return it->second;
    IntPoly r;
    std::size_t edges2 = 0, pick = n;
    int best = 65;
    for (std::size_t v = 0; v < n; ++v) {
      int d = popcount(adj[v]);
      edges2 += static_cast<std::size_t>(d);
      if (d == 0) pick = v, best = 0;
      if (d > 0 && d < best) best = d, pick = v;
    }
    if (edges2 == 0) {
      r.assign(n + 1, 0);
      r[n] = 1;
    } else if (edges2 == n * (n - 1)) {
      r = falling(n);
    } else if (best == 0) {
      r = mul_q(solve(remove_vertex(adj, pick)));
    } else {
      std::size_t v = pick;
      std::size_t u = static_cast<std::size_t>(__builtin_ctzll(adj[v]));
      auto del = adj;
      del[u] &= ~bit(static_cast<Vertex>(v));
      del[v] &= ~bit(static_cast<Vertex>(u));
      auto con = del;
      con[u] |= con[v];
      for (VertexMask f = con[v]; f; f &= f - 1) con[__builtin_ctzll(f)] |= bit(static_cast<Vertex>(u));
      con[u] &= ~bit(static_cast<Vertex>(u));
      con = remove_vertex(con, v);
      r = sub(solve(std::move(del)), solve(std::move(con)));
    }
    memo_.emplace(std::move(adj), r);
    return r;
  }

  std::map<std::vector<VertexMask>, IntPoly> memo_;
};

inline RationalPoly to_rational(const IntPoly& p) {
  std::vector<Rational> c;
  for (const auto& x : p) c.emplace_back(x);
  return RationalPoly(std::move(c));
}

}  // namespace detail

inline RationalPoly chromatic_poly_simple(const Supergraph& g) {
  std::vector<VertexMask> adj;
  for (Vertex v = 0; v < g.size(); ++v) adj.push_back(g.neighbors(v));
  return detail::to_rational(detail::DeletionContraction().run(std::move(adj)));
}

// Σ_m |P_m(k, G)| C(q, m), counting ordered tuples of nonempty independent
// sets that cover each vertex exactly k_i times.
inline RationalPoly k_chromatic_direct(const Supergraph& g, const WeightVector& k) {
  check_weight(g, k);
  if (k.is_zero()) return RationalPoly::constant(1);
  std::vector<VertexMask> sets;
  for (VertexMask s : enumerate_independent_sets(g, k.support()))
    if (s) sets.push_back(s);
  std::map<WeightVector, std::vector<BigInt>> memo;
  auto count = [&](auto&& self, const WeightVector& rem) -> std::vector<BigInt> {
    if (rem.is_zero()) return {1};
    auto it = memo.find(rem);
    if (it != memo.end()) return it->second;
    std::vector<BigInt> r;
    VertexMask supp = rem.support();
    for (VertexMask s : sets) {
      if (s & ~supp) continue;
      WeightVector next = rem;
      for (VertexMask f = s; f; f &= f - 1) next.add(static_cast<Vertex>(__builtin_ctzll(f)), -1);
      auto sub = self(self, next);
      if (r.size() < sub.size() + 1) r.resize(sub.size() + 1, 0);
      for (std::size_t m = 0; m < sub.size(); ++m) r[m + 1] += sub[m];
    }
    memo.emplace(rem, r);
    return r;
  };
  auto counts = count(count, k);
  RationalPoly p;
  for (std::size_t m = 0; m < counts.size(); ++m)
    if (counts[m] != 0) p += binomial(RationalPoly::q(), static_cast<int>(m)) * Rational(counts[m]);
  return p;
}

inline RationalPoly k_chromatic_join(const Supergraph& g, const WeightVector& k) {
  check_weight(g, k);
  if (k.is_zero()) return RationalPoly::constant(1);
  BigInt denom = 1;
  for (int c : k.counts()) denom *= factorial(c);
  return chromatic_poly_simple(join_graph(g, k)) * Rational(BigInt(1), denom);
}

struct BondBlock {
  WeightVector block;
  int multiplicity;
  bool operator==(const BondBlock&) const = default;
};

struct BondPartition {
  std::vector<BondBlock> blocks;  // distinct blocks, descending
  int size() const {
    int s = 0;
    for (const auto& b : blocks) s += b.multiplicity;
    return s;
  }
  bool operator==(const BondPartition&) const = default;
};

// Multiset partitions of the weight multiset into blocks with connected
// support. Blocks are listed in non-increasing order, which makes each
// partition appear once.
inline std::vector<BondPartition> bond_lattice(const Supergraph& g, const WeightVector& k) {
  check_weight(g, k);
  std::vector<WeightVector> candidates;
  for (const auto& b : weights_up_to(k))
    if (is_connected_set(g, b.support())) candidates.push_back(b);
  std::sort(candidates.begin(), candidates.end(), std::greater<>());
  std::vector<BondPartition> out;
  std::vector<std::size_t> chosen;
  auto rec = [&](auto&& self, const WeightVector& rem, std::size_t from) -> void {
    if (rem.is_zero()) {
      BondPartition p;
      for (auto j : chosen) {
        if (!p.blocks.empty() && p.blocks.back().block == candidates[j]) ++p.blocks.back().multiplicity;
        else p.blocks.push_back({candidates[j], 1});
      }
      out.push_back(std::move(p));
      return;
    }
    for (std::size_t j = from; j < candidates.size(); ++j) {
      if (!candidates[j].fits_in(rem)) continue;
      chosen.push_back(j);
      self(self, rem - candidates[j], j);
      chosen.pop_back();
    }
  };
  if (!k.is_zero()) rec(rec, k, 0);
  return out;
}

using MultOracle = std::function<BigInt(const WeightVector&)>;

// (-1)^{ht k} Σ_J (-1)^{|J|+|J_1|} Π_{J_0} C(q m(β), D) Π_{J_1} C(-q m(β), D)
inline RationalPoly theorem_rhs(const Supergraph& g, const WeightVector& k, const MultOracle& mult) {
  check_weight(g, k);
  if (!is_free_weight(g, k)) throw DomainError("weight " + k.to_string() + " is not free");
  RationalPoly total;
  for (const auto& part : bond_lattice(g, k)) {
    int odd_blocks = 0;
    RationalPoly term = RationalPoly::constant(1);
    for (const auto& b : part.blocks) {
      BigInt m = mult(b.block);
      bool odd = g.parity(b.block) == Parity::odd;
      if (odd) odd_blocks += b.multiplicity;
      RationalPoly arg = RationalPoly::q() * Rational(odd ? BigInt(-m) : m);
      term = term * binomial(arg, b.multiplicity);
      if (term.is_zero()) break;
    }
    if ((part.size() + odd_blocks) % 2) term *= Rational(-1);
    total += term;
  }
  if (k.height() % 2) total *= Rational(-1);
  return total;
}

}  // namespace superheap
