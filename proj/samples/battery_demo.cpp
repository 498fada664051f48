// Cross-checks two theorems against the brute-force oracle on Z_n and a
// random rational corpus.

#include "bccore/bccore.hpp"

#include <iostream>

using namespace bccore;

int main() {
  for (std::uint32_t n : {4, 6, 9}) {
    const auto rep = run_battery(Theorem::existence_criteria, FiniteRing::integers_mod(n), std::nullopt, 0);
    std::cout << rep.corpus << " " << rep.theorem << ": " << rep.agreements << "/" << rep.tuples << "\n";
  }
  MatrixCorpusSpec spec;
  spec.count = 100;
  const auto rep = run_battery(Theorem::formulas, spec);
  std::cout << to_json(rep, false).dump(2) << "\n";
  return rep.clean() ? 0 : 1;
}
