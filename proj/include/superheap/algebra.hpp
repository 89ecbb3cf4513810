#pragma once

#include "superheap/lyndon.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace superheap {

// Integer combination of heaps: an element of the enveloping algebra in the
// heap basis. Terms are keyed by standard word, so iteration follows heap order.
class HeapPolynomial {
 public:
  explicit HeapPolynomial(const Supergraph& g) : g_(&g) {}

  static HeapPolynomial of(const Heap& e, std::int64_t c = 1) {
    HeapPolynomial p(e.graph());
    p.add(e.standard_word(), c);
    return p;
  }

  const Supergraph& graph() const { return *g_; }
  const std::map<Word, std::int64_t>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  std::int64_t coefficient(const Heap& e) const {
    auto it = terms_.find(e.standard_word());
    return it == terms_.end() ? 0 : it->second;
  }

  void add(const Word& st, std::int64_t c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(st, c);
    if (!fresh) {
      it->second = checked_add(it->second, c);
      if (it->second == 0) terms_.erase(it);
    }
  }

  // Parity of a homogeneous polynomial; nullopt for zero or mixed parity.
  std::optional<Parity> parity() const {
    std::optional<Parity> p;
    for (const auto& [w, c] : terms_) {
      Parity q = Heap::from_standard(*g_, w).parity();
      if (p && *p != q) return std::nullopt;
      p = q;
    }
    return p;
  }

  bool is_homogeneous() const { return is_zero() || parity().has_value(); }

  HeapPolynomial& operator+=(const HeapPolynomial& o) {
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
  }
  HeapPolynomial& operator-=(const HeapPolynomial& o) {
    for (const auto& [w, c] : o.terms_) add(w, checked_mul(c, -1));
    return *this;
  }
  HeapPolynomial scaled(std::int64_t s) const {
    HeapPolynomial r(*g_);
    if (s == 0) return r;
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, checked_mul(c, s));
    return r;
  }

  friend HeapPolynomial operator+(HeapPolynomial a, const HeapPolynomial& b) { return a += b; }
  friend HeapPolynomial operator-(HeapPolynomial a, const HeapPolynomial& b) { return a -= b; }

  // Product in the enveloping algebra.
  friend HeapPolynomial operator*(const HeapPolynomial& a, const HeapPolynomial& b) {
    if (a.g_ != b.g_ && !(*a.g_ == *b.g_)) throw DomainError("heap polynomials live on different graphs");
    HeapPolynomial r(*a.g_);
    for (const auto& [u, cu] : a.terms_)
      for (const auto& [v, cv] : b.terms_) {
        Word st = u;
        int sign = 1;
        for (Vertex x : v) sign *= drop_letter(*a.g_, st, x);
        r.add(st, checked_mul(checked_mul(cu, cv), sign));
      }
    return r;
  }

  bool operator==(const HeapPolynomial& o) const { return terms_ == o.terms_; }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [w, c] : terms_) {
      if (!first) s += c < 0 ? " - " : " + ";
      else if (c < 0) s += "-";
      first = false;
      std::int64_t a = c < 0 ? -c : c;
      if (a != 1) s += std::to_string(a) + "*";
      s += g_->format_word(w);
    }
    return s;
  }

 private:
  const Supergraph* g_;
  std::map<Word, std::int64_t> terms_;
};

inline HeapPolynomial generator(const Supergraph& g, Vertex v) {
  return HeapPolynomial::of(Heap::from_standard(g, Word{v}));
}

// [x, y] = x y - (-1)^{p(x) p(y)} y x
inline HeapPolynomial bracket_expand(const HeapPolynomial& p, const HeapPolynomial& q) {
  if (p.is_zero() || q.is_zero()) return HeapPolynomial(p.graph());
  auto pp = p.parity(), pq = q.parity();
  if (!pp || !pq) throw DomainError("bracket of a mixed-parity polynomial");
  bool both_odd = *pp == Parity::odd && *pq == Parity::odd;
  HeapPolynomial r = p * q;
  if (both_odd) r += q * p;
  else r -= q * p;
  return r;
}

class LieMonomial {
 public:
  static LieMonomial leaf(Vertex v) {
    LieMonomial m;
    m.node_ = std::make_shared<Node>(Node{v, {}, {}});
    return m;
  }

  static LieMonomial bracket(const LieMonomial& l, const LieMonomial& r) {
    LieMonomial m;
    m.node_ = std::make_shared<Node>(Node{0, l.node_, r.node_});
    return m;
  }

  bool is_leaf() const { return !node_->left; }
  Vertex vertex() const { return node_->v; }
  LieMonomial left() const { return LieMonomial(node_->left); }
  LieMonomial right() const { return LieMonomial(node_->right); }

  std::size_t degree() const { return is_leaf() ? 1 : left().degree() + right().degree(); }

  void leaves(Word& out) const {
    if (is_leaf()) out.push_back(vertex());
    else {
      left().leaves(out);
      right().leaves(out);
    }
  }

  WeightVector weight(const Supergraph& g) const {
    Word w;
    leaves(w);
    auto k = WeightVector::zero(g.size());
    for (Vertex v : w) k.add(v);
    return k;
  }

  Parity parity(const Supergraph& g) const { return g.parity(weight(g)); }

  std::string to_string(const Supergraph& g) const {
    if (is_leaf()) return g.name(vertex());
    return "[" + left().to_string(g) + "," + right().to_string(g) + "]";
  }

  bool operator==(const LieMonomial& o) const {
    if (is_leaf() != o.is_leaf()) return false;
    if (is_leaf()) return vertex() == o.vertex();
    return left() == o.left() && right() == o.right();
  }

 private:
  struct Node {
    Vertex v;
    std::shared_ptr<const Node> left, right;
  };
  LieMonomial() = default;
  explicit LieMonomial(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// e(w) = [[..[a_1, a_2], ..], a_r]
inline LieMonomial left_normed(const Word& w) {
  if (w.empty()) throw DomainError("left-normed bracket of the empty word");
  LieMonomial m = LieMonomial::leaf(w[0]);
  for (std::size_t j = 1; j < w.size(); ++j) m = LieMonomial::bracket(m, LieMonomial::leaf(w[j]));
  return m;
}

inline HeapPolynomial expand_monomial(const Supergraph& g, const LieMonomial& m) {
  if (m.is_leaf()) {
    if (m.vertex() >= g.size()) throw DomainError("leaf outside the vertex set");
    return generator(g, m.vertex());
  }
  return bracket_expand(expand_monomial(g, m.left()), expand_monomial(g, m.right()));
}

inline LieMonomial lambda_unchecked(const Heap& e) {
  if (e.size() == 1) return LieMonomial::leaf(e.standard_word().front());
  auto f = sigma_unchecked(e);
  return LieMonomial::bracket(lambda_unchecked(f.left), lambda_unchecked(f.right));
}

inline LieMonomial lambda_monomial(const Heap& e) {
  if (e.empty() || !is_super_lyndon(e)) throw DomainError("heap " + e.to_string() + " is not super Lyndon");
  return lambda_unchecked(e);
}

}  // namespace superheap
