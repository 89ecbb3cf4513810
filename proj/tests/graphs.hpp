#pragma once

#include "superheap/supergraph.hpp"

#include <string>
#include <vector>

namespace fixtures {

using superheap::Supergraph;

inline std::vector<std::string> six() { return {"1", "2", "3", "4", "5", "6"}; }

// Quasi-Dynkin diagram of the first worked matrix, without real annotations.
inline Supergraph ex1_plain() {
  return Supergraph(six(), {{"1", "2"}, {"2", "3"}, {"2", "4"}, {"3", "6"}, {"4", "5"}}, {"3", "5"});
}

inline Supergraph ex1_annotated() {
  return Supergraph(six(), {{"1", "2"}, {"2", "3"}, {"2", "4"}, {"3", "6"}, {"4", "5"}}, {"3", "5"}, {"1", "4"});
}

// Path 1-2-3-4-5-6 of the second worked matrix.
inline Supergraph ex2_plain() {
  return Supergraph(six(), {{"1", "2"}, {"2", "3"}, {"3", "4"}, {"4", "5"}, {"5", "6"}}, {"3", "5"});
}

inline Supergraph path(int n, std::vector<std::string> psi = {}) {
  std::vector<std::string> v;
  std::vector<std::pair<std::string, std::string>> e;
  for (int j = 1; j <= n; ++j) v.push_back(std::to_string(j));
  for (int j = 1; j < n; ++j) e.emplace_back(std::to_string(j), std::to_string(j + 1));
  return Supergraph(v, e, psi);
}

inline Supergraph complete(int n, std::vector<std::string> psi = {}) {
  std::vector<std::string> v;
  std::vector<std::pair<std::string, std::string>> e;
  for (int j = 1; j <= n; ++j) v.push_back(std::to_string(j));
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) e.emplace_back(std::to_string(a), std::to_string(b));
  return Supergraph(v, e, psi);
}

inline Supergraph edgeless(int n, std::vector<std::string> psi = {}) {
  std::vector<std::string> v;
  for (int j = 1; j <= n; ++j) v.push_back(std::to_string(j));
  return Supergraph(v, {}, psi);
}

// Single edge 3-6 with 3 odd, as in the first worked example's support.
inline Supergraph edge36(bool three_odd = true) {
  return Supergraph({"3", "6"}, {{"3", "6"}}, three_odd ? std::vector<std::string>{"3"} : std::vector<std::string>{});
}

}  // namespace fixtures
