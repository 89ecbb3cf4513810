#pragma once

#include "superheap/core.hpp"

#include <string>
#include <utility>
#include <vector>

namespace superheap {

// Polynomial in q with exact rational coefficients, ascending degree.
class RationalPoly {
 public:
  RationalPoly() = default;
  explicit RationalPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

  static RationalPoly constant(Rational r) { return RationalPoly(std::vector<Rational>{std::move(r)}); }
  static RationalPoly q() { return RationalPoly(std::vector<Rational>{0, 1}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Rational coefficient(int j) const {
    return j >= 0 && j < static_cast<int>(c_.size()) ? c_[static_cast<std::size_t>(j)] : Rational(0);
  }
  const std::vector<Rational>& coefficients() const { return c_; }

  RationalPoly& operator+=(const RationalPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t j = 0; j < o.c_.size(); ++j) c_[j] += o.c_[j];
    trim();
    return *this;
  }
  RationalPoly& operator-=(const RationalPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t j = 0; j < o.c_.size(); ++j) c_[j] -= o.c_[j];
    trim();
    return *this;
  }
  RationalPoly& operator*=(const Rational& s) {
    for (auto& x : c_) x *= s;
    trim();
    return *this;
  }
  friend RationalPoly operator+(RationalPoly a, const RationalPoly& b) { return a += b; }
  friend RationalPoly operator-(RationalPoly a, const RationalPoly& b) { return a -= b; }
  friend RationalPoly operator*(RationalPoly a, const Rational& s) { return a *= s; }
  friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return RationalPoly(std::move(r));
  }

  Rational operator()(const Rational& x) const {
    Rational r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
  }

  bool operator==(const RationalPoly& o) const { return c_ == o.c_; }

  std::string to_string() const {
    if (c_.empty()) return "0";
    std::string s;
    for (int j = degree(); j >= 0; --j) {
      const Rational& x = c_[static_cast<std::size_t>(j)];
      if (x == 0) continue;
      Rational a = x < 0 ? Rational(-x) : x;
      if (s.empty()) s += x < 0 ? "-" : "";
      else s += x < 0 ? " - " : " + ";
      bool unit = a == 1 && j > 0;
      if (!unit) s += superheap::to_string(a);
      if (j > 0) s += (unit ? "" : "*") + std::string("q") + (j > 1 ? "^" + std::to_string(j) : "");
    }
    return s;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rational> c_;
};

// C(p, d) = p (p-1) ... (p-d+1) / d!
inline RationalPoly binomial(const RationalPoly& p, int d) {
  RationalPoly r = RationalPoly::constant(1);
  for (int j = 0; j < d; ++j) r = r * (p - RationalPoly::constant(j));
  return r * Rational(1, factorial(d));
}

}  // namespace superheap
