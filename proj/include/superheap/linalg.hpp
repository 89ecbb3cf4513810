#pragma once

#include "superheap/algebra.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace superheap {

template <class T>
using Matrix = std::vector<std::vector<T>>;

// Fraction-free Gaussian elimination. Every division is exact; `pivots`
// receives the pivot column of each rank step.
inline std::size_t bareiss_rank(Matrix<BigInt> m, std::vector<std::size_t>* pivots = nullptr) {
  std::size_t rows = m.size();
  if (rows == 0) return 0;
  std::size_t cols = m[0].size();
  BigInt prev = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[rank]);
    const BigInt piv = m[rank][c];
    for (std::size_t i = rank + 1; i < rows; ++i) {
      const BigInt f = m[i][c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        m[i][j] = piv * m[i][j] - f * m[rank][j];
        m[i][j] /= prev;
      }
      m[i][c] = 0;
    }
    prev = piv;
    if (pivots) pivots->push_back(c);
    ++rank;
  }
  return rank;
}

struct ExpansionMatrix {
  std::vector<Word> columns;  // ascending heap order
  Matrix<BigInt> rows;
};

inline ExpansionMatrix expansion_matrix(const std::vector<HeapPolynomial>& polys) {
  ExpansionMatrix em;
  std::set<Word> cols;
  for (const auto& p : polys)
    for (const auto& [w, c] : p.terms()) cols.insert(w);
  em.columns.assign(cols.begin(), cols.end());
  std::map<Word, std::size_t> index;
  for (std::size_t j = 0; j < em.columns.size(); ++j) index.emplace(em.columns[j], j);
  for (const auto& p : polys) {
    std::vector<BigInt> row(em.columns.size(), 0);
    for (const auto& [w, c] : p.terms()) row[index.at(w)] = c;
    em.rows.push_back(std::move(row));
  }
  return em;
}

struct RankCertificate {
  std::size_t rows = 0;
  std::size_t columns = 0;
  std::size_t rank = 0;
  // "bareiss": pivots are the elimination pivot columns.
  // "triangular": pivots are the distinct leading heaps, one per row, so the
  // submatrix on those columns is triangular with nonzero diagonal.
  std::string method;
  std::vector<Word> pivots;
  bool full_row_rank() const { return rank == rows; }
};

// Exact rank of the expansion matrix. Small matrices always go through
// Bareiss; large ones are first offered the triangular certificate, which
// proves full row rank without elimination, and fall back to Bareiss.
inline RankCertificate rank_certificate(const std::vector<HeapPolynomial>& polys,
                                        std::size_t bareiss_limit = 250000) {
  RankCertificate cert;
  cert.rows = polys.size();
  std::set<Word> cols;
  for (const auto& p : polys)
    for (const auto& [w, c] : p.terms()) cols.insert(w);
  cert.columns = cols.size();
  if (cert.rows * cert.columns > bareiss_limit) {
    std::set<Word> leads;
    bool ok = true;
    for (const auto& p : polys) {
      if (p.is_zero() || !leads.insert(p.terms().begin()->first).second) {
        ok = false;
        break;
      }
    }
    if (ok) {
      cert.method = "triangular";
      cert.rank = cert.rows;
      for (const auto& p : polys) cert.pivots.push_back(p.terms().begin()->first);
      return cert;
    }
  }
  auto em = expansion_matrix(polys);
  std::vector<std::size_t> piv;
  cert.method = "bareiss";
  cert.rank = bareiss_rank(std::move(em.rows), &piv);
  for (auto c : piv) cert.pivots.push_back(em.columns[c]);
  return cert;
}

// Exact rational x with Σ x_j basis_j = target, or nullopt when the target is
// outside the span. Free variables are set to zero.
inline std::optional<std::vector<Rational>> solve_in_span(const std::vector<HeapPolynomial>& basis,
                                                          const HeapPolynomial& target) {
  std::vector<HeapPolynomial> all(basis);
  all.push_back(target);
  auto em = expansion_matrix(all);
  std::size_t nb = basis.size(), nr = em.columns.size();
  // Equations are indexed by heaps; unknowns by basis elements.
  Matrix<Rational> a(nr, std::vector<Rational>(nb + 1));
  for (std::size_t j = 0; j <= nb; ++j)
    for (std::size_t r = 0; r < nr; ++r) a[r][j] = Rational(em.rows[j][r]);
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t c = 0; c < nb && row < nr; ++c) {
    std::size_t p = row;
    while (p < nr && a[p][c] == 0) ++p;
    if (p == nr) continue;
    std::swap(a[p], a[row]);
    Rational inv = 1 / a[row][c];
    for (std::size_t j = c; j <= nb; ++j) a[row][j] *= inv;
    for (std::size_t i = 0; i < nr; ++i) {
      if (i == row || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (std::size_t j = c; j <= nb; ++j) a[i][j] -= f * a[row][j];
    }
    pivot_col.push_back(c);
    ++row;
  }
  for (std::size_t r = row; r < nr; ++r)
    if (a[r][nb] != 0) return std::nullopt;
  std::vector<Rational> x(nb, 0);
  for (std::size_t r = 0; r < pivot_col.size(); ++r) x[pivot_col[r]] = a[r][nb];
  return x;
}

}  // namespace superheap
