#pragma once

#include "superheap/chromatic.hpp"
#include "superheap/lyndon.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace superheap {

enum class MultMethod { recursion, closed_form };

inline int mobius(int n) {
  int r = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    r = -r;
  }
  return n > 1 ? -r : r;
}

inline std::vector<int> divisors(int n) {
  std::vector<int> d;
  for (int l = 1; l <= n; ++l)
    if (n % l == 0) d.push_back(l);
  return d;
}

// Multiplicities of free roots from linear coefficients of k-chromatic
// polynomials. Caches per weight; one engine per graph and worker.
class MultiplicityEngine {
 public:
  explicit MultiplicityEngine(const Supergraph& g) : g_(&g) {}

  const Supergraph& graph() const { return *g_; }

  // |π_k(q)[q]|
  Rational linear_coefficient(const WeightVector& k) {
    auto it = linear_.find(k);
    if (it != linear_.end()) return it->second;
    Rational c = k_chromatic_direct(*g_, k).coefficient(1);
    if (c < 0) c = -c;
    linear_.emplace(k, c);
    return c;
  }

  BigInt recursion(const WeightVector& k) {
    check_free(k);
    return recursion_unchecked(k);
  }

  Rational closed_form(const WeightVector& k) {
    check_free(k);
    if (k.is_zero() || !is_connected_set(*g_, k.support())) return 0;
    bool odd = g_->parity(k) == Parity::odd;
    Rational s = 0;
    for (int l : divisors(k.gcd())) {
      int mu = mobius(l);
      if (mu == 0) continue;
      int sign = odd && l % 2 == 0 ? -mu : mu;
      s += Rational(sign, l) * linear_coefficient(k.divided_by(l));
    }
    return s;
  }

 private:
  void check_free(const WeightVector& k) const {
    check_weight(*g_, k);
    if (!is_free_weight(*g_, k)) throw DomainError("weight " + k.to_string() + " is not free");
  }

  BigInt recursion_unchecked(const WeightVector& k) {
    if (k.is_zero() || !is_connected_set(*g_, k.support())) return 0;
    auto it = mult_.find(k);
    if (it != mult_.end()) return it->second;
    Rational m = linear_coefficient(k);
    for (int l : divisors(k.gcd())) {
      if (l == 1) continue;
      WeightVector sub = k.divided_by(l);
      int s = g_->parity(sub) == Parity::odd && l % 2 == 0 ? -1 : 1;
      m -= Rational(s, l) * Rational(recursion_unchecked(sub));
    }
    if (!is_integer(m) || m < 0)
      throw ConsistencyError("multiplicity recursion produced " + to_string(m) + " at weight " + k.to_string());
    BigInt r = numerator(m);
    mult_.emplace(k, r);
    return r;
  }

  const Supergraph* g_;
  std::map<WeightVector, Rational> linear_;
  std::map<WeightVector, BigInt> mult_;
};

inline BigInt mult_free_root(const Supergraph& g, const WeightVector& k) {
  MultiplicityEngine e(g);
  return e.recursion(k);
}

struct MultiplicityReport {
  WeightVector weight;
  Parity parity;
  BigInt recursion;
  Rational closed_form;
  Rational linear_coefficient;
  bool agree() const { return Rational(recursion) == closed_form; }
};

inline MultiplicityReport multiplicity_report(MultiplicityEngine& e, const WeightVector& k) {
  return {k, e.graph().parity(k), e.recursion(k), e.closed_form(k),
          k.is_zero() ? Rational(0) : e.linear_coefficient(k)};
}

struct MultiplicityEntry {
  WeightVector weight;
  Parity parity;
  BigInt mult;
  std::string route;
};

struct MultiplicityTable {
  std::vector<MultiplicityEntry> entries;
};

// Free, connected-support weights up to cap with their multiplicities.
inline MultiplicityTable free_roots_up_to(MultiplicityEngine& e, const WeightVector& cap) {
  const Supergraph& g = e.graph();
  check_weight(g, cap);
  MultiplicityTable t;
  auto ws = weights_up_to(cap);
  std::sort(ws.begin(), ws.end(), [](const WeightVector& a, const WeightVector& b) {
    if (a.height() != b.height()) return a.height() < b.height();
    return a > b;
  });
  for (const auto& k : ws) {
    if (k.is_zero() || !is_free_weight(g, k) || !is_connected_set(g, k.support())) continue;
    t.entries.push_back({k, g.parity(k), e.recursion(k), "recursion"});
  }
  return t;
}

inline MultiplicityTable free_roots_up_to(const Supergraph& g, const WeightVector& cap) {
  MultiplicityEngine e(g);
  return free_roots_up_to(e, cap);
}

// Dense truncated power series over weights 0..cap, indexed in the mixed-radix
// order of weights_up_to.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(const WeightVector& cap) : cap_(cap) {
    std::size_t n = 1;
    for (int c : cap.counts()) {
      stride_.push_back(n);
      n *= static_cast<std::size_t>(c + 1);
    }
    coeff_.assign(n, 0);
  }

  const WeightVector& cap() const { return cap_; }
  std::size_t size() const { return coeff_.size(); }

  std::size_t index(const WeightVector& w) const {
    std::size_t i = 0;
    for (std::size_t v = 0; v < w.size(); ++v) i += stride_[v] * static_cast<std::size_t>(w[v]);
    return i;
  }
  WeightVector weight(std::size_t i) const {
    std::vector<int> c(cap_.size());
    for (std::size_t v = 0; v < c.size(); ++v) c[v] = static_cast<int>((i / stride_[v]) % (cap_[v] + 1));
    return WeightVector(std::move(c));
  }

  BigInt& operator[](std::size_t i) { return coeff_[i]; }
  const BigInt& operator[](std::size_t i) const { return coeff_[i]; }

  // this *= Σ_j c_j x^{j k}
  void multiply_by_power_series(const WeightVector& k, const std::vector<BigInt>& c) {
    std::vector<BigInt> out(coeff_.size(), 0);
    for (std::size_t i = 0; i < coeff_.size(); ++i) {
      if (coeff_[i] == 0) continue;
      WeightVector w = weight(i);
      for (std::size_t j = 0; j < c.size(); ++j) {
        WeightVector t = w + k.scaled(static_cast<int>(j));
        if (!t.fits_in(cap_)) break;
        out[index(t)] += coeff_[i] * c[j];
      }
    }
    coeff_ = std::move(out);
  }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries r(a.cap_);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a.coeff_[i] == 0) continue;
      WeightVector wa = a.weight(i);
      for (std::size_t j = 0; j < b.size(); ++j) {
        if (b.coeff_[j] == 0) continue;
        WeightVector t = wa + b.weight(j);
        if (t.fits_in(a.cap_)) r.coeff_[r.index(t)] += a.coeff_[i] * b.coeff_[j];
      }
    }
    return r;
  }

 private:
  WeightVector cap_;
  std::vector<std::size_t> stride_;
  std::vector<BigInt> coeff_;
};

// Σ_w (#heaps of weight w) x^w for all w <= cap.
inline TruncatedSeries heap_series(const Supergraph& g, const WeightVector& cap) {
  TruncatedSeries s(cap);
  for_each_standard_word(g, cap, [&](const Word& word) {
    auto k = WeightVector::zero(g.size());
    for (Vertex v : word) k.add(v);
    s[s.index(k)] += 1;
    return true;
  });
  return s;
}

struct SeriesReport {
  bool ok = true;
  std::size_t coefficients_checked = 0;
  std::optional<WeightVector> mismatch;
  BigInt lhs = 0;
  BigInt rhs = 0;
};

inline SeriesReport compare_series(const TruncatedSeries& lhs, const TruncatedSeries& rhs) {
  SeriesReport r;
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    ++r.coefficients_checked;
    if (lhs[i] != rhs[i]) {
      r.ok = false;
      r.mismatch = lhs.weight(i);
      r.lhs = lhs[i];
      r.rhs = rhs[i];
      return r;
    }
  }
  return r;
}

// Heap counts against Π_{even} (1 - x^k)^{-d(k)} Π_{odd} (1 + x^k)^{d(k)},
// with d(k) the number of super Lyndon heaps of weight k.
inline SeriesReport verify_pbw(HeapCatalog& cat, const WeightVector& cap) {
  const Supergraph& g = cat.graph();
  TruncatedSeries lhs = heap_series(g, cap);
  TruncatedSeries rhs(cap);
  rhs[0] = 1;
  for (const auto& k : weights_up_to(cap)) {
    if (k.is_zero()) continue;
    std::size_t d = cat.super_lyndon_count(k);
    if (d == 0) continue;
    std::vector<BigInt> c;
    bool odd = g.parity(k) == Parity::odd;
    for (int j = 0; k.scaled(j).fits_in(cap); ++j) {
      auto dd = static_cast<std::int64_t>(d);
      c.push_back(odd ? binomial(dd, j) : binomial(dd + j - 1, j));
    }
    rhs.multiply_by_power_series(k, c);
  }
  return compare_series(lhs, rhs);
}

inline SeriesReport verify_pbw(const Supergraph& g, const WeightVector& cap) {
  HeapCatalog cat(g);
  return verify_pbw(cat, cap);
}

// Heap counts times the signed independent-set polynomial equals 1.
inline SeriesReport verify_cartier_foata(const Supergraph& g, const WeightVector& cap) {
  TruncatedSeries lhs = heap_series(g, cap);
  TruncatedSeries ind(cap);
  for (VertexMask s : enumerate_independent_sets(g, cap.support())) {
    auto w = WeightVector::zero(g.size());
    for (VertexMask f = s; f; f &= f - 1) w.add(static_cast<Vertex>(__builtin_ctzll(f)));
    ind[ind.index(w)] += popcount(s) % 2 ? -1 : 1;
  }
  TruncatedSeries one(cap);
  one[0] = 1;
  return compare_series(lhs * ind, one);
}

}  // namespace superheap
