#pragma once

#include "superheap/core.hpp"

#include <algorithm>
#include <compare>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace superheap {

enum class Parity { even, odd };

inline const char* to_string(Parity p) { return p == Parity::odd ? "odd" : "even"; }

inline Parity operator+(Parity a, Parity b) { return a == b ? Parity::even : Parity::odd; }

class WeightVector {
 public:
  WeightVector() = default;
  explicit WeightVector(std::vector<int> counts) : counts_(std::move(counts)) {
    for (int c : counts_)
      if (c < 0) throw DomainError("weight components must be nonnegative");
  }

  static WeightVector zero(std::size_t n) { return WeightVector(std::vector<int>(n, 0)); }
  static WeightVector unit(std::size_t n, Vertex v) {
    auto w = zero(n);
    w.counts_.at(v) = 1;
    return w;
  }

  // Comma separated components in vertex order; the length must be exactly n.
  static WeightVector parse(const std::string& text, std::size_t n) {
    std::vector<int> counts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty() || item.find_first_not_of("0123456789 ") != std::string::npos)
        throw DomainError("malformed weight component '" + item + "'");
      counts.push_back(std::stoi(item));
    }
    if (counts.size() != n)
      throw DomainError("weight has " + std::to_string(counts.size()) + " components, graph has " +
                        std::to_string(n) + " vertices");
    return WeightVector(std::move(counts));
  }

  std::size_t size() const { return counts_.size(); }
  int operator[](std::size_t v) const { return counts_[v]; }
  const std::vector<int>& counts() const { return counts_; }

  int height() const { return std::accumulate(counts_.begin(), counts_.end(), 0); }
  bool is_zero() const { return height() == 0; }

  VertexMask support() const {
    VertexMask m = 0;
    for (std::size_t v = 0; v < counts_.size(); ++v)
      if (counts_[v] > 0) m |= bit(static_cast<Vertex>(v));
    return m;
  }

  // Componentwise k <= cap.
  bool fits_in(const WeightVector& cap) const {
    for (std::size_t v = 0; v < counts_.size(); ++v)
      if (counts_[v] > cap.counts_.at(v)) return false;
    return true;
  }

  int gcd() const {
    int g = 0;
    for (int c : counts_) g = std::gcd(g, c);
    return g;
  }

  WeightVector divided_by(int l) const {
    std::vector<int> r(counts_);
    for (int& c : r) {
      if (c % l != 0) throw DomainError("weight not divisible by " + std::to_string(l));
      c /= l;
    }
    return WeightVector(std::move(r));
  }

  WeightVector scaled(int l) const {
    std::vector<int> r(counts_);
    for (int& c : r) c *= l;
    return WeightVector(std::move(r));
  }

  WeightVector operator+(const WeightVector& o) const {
    std::vector<int> r(counts_);
    for (std::size_t v = 0; v < r.size(); ++v) r[v] += o.counts_.at(v);
    return WeightVector(std::move(r));
  }

  WeightVector operator-(const WeightVector& o) const {
    std::vector<int> r(counts_);
    for (std::size_t v = 0; v < r.size(); ++v) r[v] -= o.counts_.at(v);
    return WeightVector(std::move(r));
  }

  WeightVector& add(Vertex v, int c = 1) {
    counts_.at(v) += c;
    return *this;
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t v = 0; v < counts_.size(); ++v) {
      if (v) s += ',';
      s += std::to_string(counts_[v]);
    }
    return s;
  }

  auto operator<=>(const WeightVector&) const = default;
  bool operator==(const WeightVector&) const = default;

 private:
  std::vector<int> counts_;
};

struct WeightHash {
  std::size_t operator()(const WeightVector& w) const {
    std::size_t h = 1469598103934665603ull;
    for (int c : w.counts()) h = (h ^ static_cast<std::size_t>(c)) * 1099511628211ull;
    return h;
  }
};

// All weights w with 0 <= w <= cap componentwise, in mixed-radix order (first
// component fastest). The zero weight comes first.
inline std::vector<WeightVector> weights_up_to(const WeightVector& cap) {
  std::vector<WeightVector> out;
  std::vector<int> cur(cap.size(), 0);
  while (true) {
    out.emplace_back(cur);
    std::size_t v = 0;
    while (v < cur.size() && cur[v] == cap[v]) cur[v++] = 0;
    if (v == cur.size()) break;
    ++cur[v];
  }
  return out;
}

class Supergraph {
 public:
  Supergraph() = default;

  Supergraph(std::vector<std::string> vertices, const std::vector<std::pair<std::string, std::string>>& edges,
             const std::vector<std::string>& psi, const std::vector<std::string>& real_set = {},
             const std::vector<std::string>& psi0 = {})
      : names_(std::move(vertices)) {
    if (names_.size() > max_vertices) throw DomainError("at most 64 vertices are supported");
    for (std::size_t v = 0; v < names_.size(); ++v) {
      if (names_[v].empty()) throw DomainError("empty vertex name");
      if (!index_.emplace(names_[v], static_cast<Vertex>(v)).second)
        throw DomainError("duplicate vertex '" + names_[v] + "'");
    }
    adj_.assign(names_.size(), 0);
    for (const auto& [a, b] : edges) {
      Vertex u = index_of(a), w = index_of(b);
      if (u == w) throw DomainError("self-loop at '" + a + "'");
      if (adj_[u] & bit(w)) throw DomainError("duplicate edge " + a + "-" + b);
      adj_[u] |= bit(w);
      adj_[w] |= bit(u);
    }
    for (const auto& s : psi) psi_ |= bit(index_of(s));
    for (const auto& s : real_set) real_ |= bit(index_of(s));
    for (const auto& s : psi0) psi0_ |= bit(index_of(s));
    check_annotations();
  }

  // Index-based construction; vertex names default to "1", "2", ...
  static Supergraph from_masks(std::vector<VertexMask> adjacency, VertexMask psi, VertexMask real_set = 0,
                               VertexMask psi0 = 0, std::vector<std::string> names = {}) {
    Supergraph g;
    std::size_t n = adjacency.size();
    if (n > max_vertices) throw DomainError("at most 64 vertices are supported");
    if (names.empty())
      for (std::size_t v = 0; v < n; ++v) names.push_back(std::to_string(v + 1));
    if (names.size() != n) throw DomainError("name list does not match vertex count");
    g.names_ = std::move(names);
    for (std::size_t v = 0; v < n; ++v)
      if (!g.index_.emplace(g.names_[v], static_cast<Vertex>(v)).second)
        throw DomainError("duplicate vertex '" + g.names_[v] + "'");
    VertexMask all = n == 64 ? ~VertexMask{0} : (bit(static_cast<Vertex>(n)) - 1);
    for (std::size_t v = 0; v < n; ++v) {
      if (adjacency[v] & bit(static_cast<Vertex>(v))) throw DomainError("self-loop");
      if (adjacency[v] & ~all) throw DomainError("edge endpoint outside the vertex set");
      for (std::size_t w = 0; w < n; ++w)
        if (((adjacency[v] >> w) & 1) != ((adjacency[w] >> v) & 1)) throw DomainError("asymmetric adjacency");
    }
    g.adj_ = std::move(adjacency);
    g.psi_ = psi;
    g.real_ = real_set;
    g.psi0_ = psi0;
    if ((psi | real_set | psi0) & ~all) throw DomainError("annotation outside the vertex set");
    g.check_annotations();
    return g;
  }

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(Vertex v) const { return names_.at(v); }

  Vertex index_of(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw DomainError("unknown vertex '" + name + "'");
    return it->second;
  }

  VertexMask all_vertices() const {
    return names_.size() == 64 ? ~VertexMask{0} : bit(static_cast<Vertex>(names_.size())) - 1;
  }

  VertexMask neighbors(Vertex v) const { return adj_[v]; }
  bool adjacent(Vertex a, Vertex b) const { return (adj_[a] >> b) & 1; }
  // The concurrency relation: equal or adjacent positions never commute.
  bool concurrent(Vertex a, Vertex b) const { return a == b || adjacent(a, b); }
  VertexMask concurrent_mask(Vertex v) const { return adj_[v] | bit(v); }

  bool odd(Vertex v) const { return (psi_ >> v) & 1; }
  VertexMask psi() const { return psi_; }
  VertexMask real_set() const { return real_; }
  VertexMask psi0() const { return psi0_; }

  std::vector<std::pair<Vertex, Vertex>> edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex a = 0; a < size(); ++a)
      for (Vertex b = a + 1; b < size(); ++b)
        if (adjacent(a, b)) out.emplace_back(a, b);
    return out;
  }

  bool single_char_names() const {
    return std::all_of(names_.begin(), names_.end(), [](const std::string& s) { return s.size() == 1; });
  }

  std::string format_word(const Word& w) const {
    std::string s;
    bool compact = single_char_names();
    for (std::size_t j = 0; j < w.size(); ++j) {
      if (j && !compact) s += '.';
      s += names_.at(w[j]);
    }
    return s;
  }

  Word parse_word(const std::string& text) const {
    Word w;
    if (text.find('.') != std::string::npos || !single_char_names()) {
      std::stringstream ss(text);
      std::string item;
      while (std::getline(ss, item, '.')) w.push_back(index_of(item));
    } else {
      for (char c : text) w.push_back(index_of(std::string(1, c)));
    }
    return w;
  }

  Parity parity(const WeightVector& k) const {
    int s = 0;
    for (Vertex v = 0; v < size(); ++v)
      if (odd(v)) s += k[v];
    return s % 2 ? Parity::odd : Parity::even;
  }

  // Same vertices, relabeled so that `first` leads and the others keep their order.
  Supergraph with_first(Vertex first) const {
    std::vector<Vertex> order{first};
    for (Vertex v = 0; v < size(); ++v)
      if (v != first) order.push_back(v);
    std::vector<VertexMask> adj(size(), 0);
    std::vector<std::string> names;
    std::vector<Vertex> pos(size());
    for (Vertex j = 0; j < size(); ++j) pos[order[j]] = j;
    auto remap = [&](VertexMask m) {
      VertexMask r = 0;
      for (Vertex v = 0; v < size(); ++v)
        if ((m >> v) & 1) r |= bit(pos[v]);
      return r;
    };
    for (Vertex j = 0; j < size(); ++j) {
      adj[j] = remap(adj_[order[j]]);
      names.push_back(names_[order[j]]);
    }
    return from_masks(std::move(adj), remap(psi_), remap(real_), remap(psi0_), std::move(names));
  }

  bool operator==(const Supergraph& o) const {
    return names_ == o.names_ && adj_ == o.adj_ && psi_ == o.psi_ && real_ == o.real_ && psi0_ == o.psi0_;
  }

 private:
  void check_annotations() const {
    if (psi0_ & ~psi_) throw DomainError("psi0 must be a subset of psi");
    if (psi0_ & real_) throw DomainError("real_set and psi0 must be disjoint");
  }

  std::vector<std::string> names_;
  std::unordered_map<std::string, Vertex> index_;
  std::vector<VertexMask> adj_;
  VertexMask psi_ = 0;
  VertexMask real_ = 0;
  VertexMask psi0_ = 0;
};

inline Parity weight_parity(const Supergraph& g, const WeightVector& k) { return g.parity(k); }

inline void check_weight(const Supergraph& g, const WeightVector& k) {
  if (k.size() != g.size())
    throw DomainError("weight has " + std::to_string(k.size()) + " components, graph has " +
                      std::to_string(g.size()) + " vertices");
}

inline bool is_free_weight(const Supergraph& g, const WeightVector& k) {
  check_weight(g, k);
  VertexMask restricted = g.real_set() | g.psi0();
  for (Vertex v = 0; v < g.size(); ++v)
    if (((restricted >> v) & 1) && k[v] > 1) return false;
  return true;
}

inline bool is_connected_set(const Supergraph& g, VertexMask s) {
  if (s == 0) return false;
  VertexMask seen = s & (~s + 1);
  VertexMask frontier = seen;
  while (frontier) {
    VertexMask next = 0;
    for (VertexMask f = frontier; f; f &= f - 1) next |= g.neighbors(static_cast<Vertex>(__builtin_ctzll(f)));
    next &= s & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == s;
}

inline bool is_connected_support(const Supergraph& g, const WeightVector& k) {
  check_weight(g, k);
  return is_connected_set(g, k.support());
}

inline bool is_independent(const Supergraph& g, VertexMask s) {
  for (VertexMask f = s; f; f &= f - 1)
    if (g.neighbors(static_cast<Vertex>(__builtin_ctzll(f))) & s) return false;
  return true;
}

// All independent subsets of `restrict`, the empty set first, then by
// increasing bitmask value.
inline std::vector<VertexMask> enumerate_independent_sets(const Supergraph& g, VertexMask restrict) {
  if (restrict & ~g.all_vertices()) throw DomainError("restriction outside the vertex set");
  std::vector<VertexMask> out;
  std::vector<Vertex> verts;
  for (VertexMask f = restrict; f; f &= f - 1) verts.push_back(static_cast<Vertex>(__builtin_ctzll(f)));
  auto rec = [&](auto&& self, std::size_t j, VertexMask cur, VertexMask blocked) -> void {
    if (j == verts.size()) {
      out.push_back(cur);
      return;
    }
    self(self, j + 1, cur, blocked);
    Vertex v = verts[j];
    if (!(blocked & bit(v))) self(self, j + 1, cur | bit(v), blocked | g.neighbors(v));
  };
  rec(rec, 0, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

// Vertex j becomes a clique j^1..j^{k_j}; cliques of adjacent vertices are
// joined completely. Parity and real annotations are dropped.
inline Supergraph join_graph(const Supergraph& g, const WeightVector& k) {
  check_weight(g, k);
  if (k.is_zero()) throw DomainError("join graph needs a nonempty support");
  if (k.height() > static_cast<int>(max_vertices)) throw DomainError("join graph would exceed 64 vertices");
  std::vector<std::string> names;
  std::vector<Vertex> owner;
  for (Vertex v = 0; v < g.size(); ++v)
    for (int r = 1; r <= k[v]; ++r) {
      names.push_back(k[v] == 1 ? g.name(v) : g.name(v) + "^" + std::to_string(r));
      owner.push_back(v);
    }
  std::size_t n = names.size();
  std::vector<VertexMask> adj(n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (a != b && g.concurrent(owner[a], owner[b])) adj[a] |= bit(static_cast<Vertex>(b));
  return Supergraph::from_masks(std::move(adj), 0, 0, 0, std::move(names));
}

struct ValidationIssue {
  int condition;  // 1..6
  std::size_t i;
  std::size_t j;
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  std::vector<Rational> symmetrizer;  // filled when condition 6 holds
  bool ok() const { return issues.empty(); }
};

class BkmSupermatrix {
 public:
  BkmSupermatrix(std::vector<std::string> names, std::vector<std::vector<Rational>> entries,
                 std::vector<std::string> psi)
      : names_(std::move(names)), entries_(std::move(entries)), psi_(std::move(psi)) {
    if (entries_.size() != names_.size()) throw DomainError("matrix must have one row per vertex");
    for (const auto& row : entries_)
      if (row.size() != names_.size()) throw DomainError("matrix must be square");
    for (const auto& p : psi_)
      if (std::find(names_.begin(), names_.end(), p) == names_.end())
        throw DomainError("psi vertex '" + p + "' is not a matrix index");
  }

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return entries_.at(i).at(j); }
  const std::vector<std::string>& psi() const { return psi_; }
  bool odd(std::size_t i) const { return std::find(psi_.begin(), psi_.end(), names_[i]) != psi_.end(); }

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<Rational>> entries_;
  std::vector<std::string> psi_;
};

inline ValidationReport validate_supermatrix(const BkmSupermatrix& a) {
  ValidationReport rep;
  std::size_t n = a.size();
  auto issue = [&](int c, std::size_t i, std::size_t j, std::string msg) {
    rep.issues.push_back({c, i, j, std::move(msg)});
  };
  for (std::size_t i = 0; i < n; ++i) {
    const Rational& d = a(i, i);
    if (d != 2 && d > 0) issue(1, i, i, "diagonal entry must be 2 or nonpositive");
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (a(i, j) > 0) issue(2, i, j, "off-diagonal entry must be nonpositive");
      if ((a(i, j) == 0) != (a(j, i) == 0)) issue(3, i, j, "a_ij = 0 must hold exactly when a_ji = 0");
      if (d == 2) {
        if (!is_integer(a(i, j)))
          issue(4, i, j, "row with a_ii = 2 must have integer entries");
        else if (a.odd(i) && numerator(a(i, j)) % 2 != 0)
          issue(5, i, j, "odd row with a_ii = 2 must have even entries");
      }
    }
  }
  // Condition 6: propagate d_j = d_i a_ij / a_ji along the nonzero pattern.
  std::vector<std::optional<Rational>> d(n);
  bool sym_ok = true;
  for (std::size_t root = 0; root < n; ++root) {
    if (d[root]) continue;
    d[root] = Rational(1);
    std::vector<std::size_t> comp{root};
    std::queue<std::size_t> q;
    q.push(root);
    while (!q.empty()) {
      std::size_t i = q.front();
      q.pop();
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j || a(i, j) == 0 || a(j, i) == 0) continue;
        Rational dj = *d[i] * a(i, j) / a(j, i);
        if (dj <= 0) {
          sym_ok = false;
          issue(6, i, j, "symmetrizer would need a nonpositive entry");
          continue;
        }
        if (!d[j]) {
          d[j] = dj;
          comp.push_back(j);
          q.push(j);
        } else if (*d[j] != dj) {
          sym_ok = false;
          issue(6, i, j, "no diagonal symmetrizer: cycle condition fails");
        }
      }
    }
    Rational lo = *d[comp.front()];
    for (auto c : comp) lo = std::min(lo, *d[c]);
    for (auto c : comp) d[c] = *d[c] / lo;
  }
  // Pairs with exactly one zero already violate condition 3; they also block DA = (DA)^T.
  for (std::size_t i = 0; i < n && sym_ok; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && (a(i, j) == 0) != (a(j, i) == 0)) sym_ok = false;
  if (sym_ok) {
    for (auto& x : d) rep.symmetrizer.push_back(*x);
  }
  // Deduplicate condition 6 reports on symmetric pairs.
  std::sort(rep.issues.begin(), rep.issues.end(), [](const auto& x, const auto& y) {
    return std::tie(x.condition, x.i, x.j) < std::tie(y.condition, y.i, y.j);
  });
  return rep;
}

inline Supergraph quasi_dynkin(const BkmSupermatrix& a) {
  auto rep = validate_supermatrix(a);
  if (!rep.ok()) throw DomainError("matrix violates condition (" + std::to_string(rep.issues.front().condition) +
                                   "): " + rep.issues.front().message);
  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<std::string> real, psi0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a(i, i) == 2) real.push_back(a.names()[i]);
    if (a.odd(i) && a(i, i) == 0) psi0.push_back(a.names()[i]);
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (a(i, j) != 0) edges.emplace_back(a.names()[i], a.names()[j]);
  }
  return Supergraph(a.names(), edges, a.psi(), real, psi0);
}

}  // namespace superheap
