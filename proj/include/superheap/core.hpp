#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace superheap {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using Vertex = std::uint32_t;
using Word = std::vector<Vertex>;
using VertexMask = std::uint64_t;

inline constexpr std::size_t max_vertices = 64;

// Invalid input or a request outside an operation's domain.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A computed result contradicted a property the mathematics guarantees.
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline VertexMask bit(Vertex v) { return VertexMask{1} << v; }

inline int popcount(VertexMask m) { return __builtin_popcountll(m); }

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw ConsistencyError("integer overflow in heap coefficient");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw ConsistencyError("integer overflow in heap coefficient");
  return r;
}

inline Rational parse_rational(const std::string& text) {
  auto trim = [](std::string s) {
    auto b = s.find_first_not_of(" \t");
    auto e = s.find_last_not_of(" \t");
    return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
  };
  std::string s = trim(text);
  auto valid_int = [](const std::string& t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = trim(s.substr(0, slash));
  std::string den = slash == std::string::npos ? "1" : trim(s.substr(slash + 1));
  if (!valid_int(num) || !valid_int(den)) throw DomainError("malformed rational '" + text + "'");
  if (num[0] == '+') num.erase(0, 1);
  if (den[0] == '+') den.erase(0, 1);
  BigInt d(den);
  if (d == 0) throw DomainError("zero denominator in '" + text + "'");
  return Rational(BigInt(num), d);
}

inline std::string to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

inline BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt r = 1;
  for (std::int64_t j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

inline BigInt factorial(std::int64_t n) {
  BigInt r = 1;
  for (std::int64_t j = 2; j <= n; ++j) r *= j;
  return r;
}

}  // namespace superheap
