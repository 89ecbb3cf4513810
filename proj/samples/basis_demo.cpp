#include "superheap/superheap.hpp"

#include <iostream>

using namespace superheap;

int main() {
  Supergraph g({"1", "2", "3", "4", "5", "6"}, {{"1", "2"}, {"2", "3"}, {"3", "4"}, {"4", "5"}, {"5", "6"}},
               {"3", "5"});
  auto k = WeightVector({0, 0, 2, 1, 2, 1});

  std::cout << "super Lyndon heaps of weight " << k.to_string() << "\n";
  auto lb = lyndon_heap_basis(g, k);
  for (const auto& e : lb.elements) {
    auto f = standard_factorization(e.heap);
    std::cout << "  " << e.heap.to_string() << "  " << f.left.to_string() << "|" << f.right.to_string() << "  "
              << e.monomial.to_string(g) << "\n";
    std::cout << "    = " << e.expansion.to_string() << "\n";
  }
  std::cout << "  rank " << lb.certificate.rank << "\n";

  auto lln = lln_basis(g, k, g.index_of("3"));
  const auto& wg = *lln.alphabet.working;
  std::cout << "left-normed basis over super-letters with base 3\n";
  for (const auto& e : lln.elements) std::cout << "  " << wg.format_word(e.word) << "  " << e.monomial.to_string(wg) << "\n";
  std::cout << "  rank " << lln.certificate.rank << "\n";

  MultiplicityEngine me(g);
  std::cout << "mult = " << me.recursion(k) << ", k-chromatic polynomial " << k_chromatic_direct(g, k).to_string()
            << "\n";
}
