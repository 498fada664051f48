// Left dual (b,c)-core inverse of a 2x2 rational matrix, and a Z_6 example.

#include "bccore/bccore.hpp"

#include <iostream>

using namespace bccore;

int main() {
  const MatrixRing<RationalField> r(RationalField{}, 2);
  const auto a = r.make({{0, 1}, {1, 0}});
  const auto b = r.make({{1, 0}, {0, 0}});
  const auto c = r.make({{0, 0}, {0, 1}});

  const auto x = left_dual_bc_core(r, a, b, c);
  if (!x) {
    std::cout << "not invertible\n";
    return 1;
  }
  std::cout << "x = " << r.format(*x) << "\n";
  for (const auto& v : verify(r, InverseKind::left_dual_bc_core, InverseInputs<Elem<decltype(r)>>::bc(a, b, c), *x).verdicts)
    std::cout << "  " << v.name << ": " << (v.holds ? "yes" : "no") << "\n";

  // every closed form gives a witness
  for (const auto& f : left_dual_bc_core_all_formulas(r, a, b, c)) std::cout << "  " << f.tag << " = " << r.format(f.value) << "\n";

  const auto z6 = FiniteRing::integers_mod(6);
  const auto y = left_dual_bc_core(z6, z6.element(1), z6.element(2), z6.element(2));
  std::cout << "Z6 (1,2,2): " << (y ? z6.format(*y) : "none") << "\n";

  if (const auto mp = moore_penrose(r, r.make({{1, 1}, {0, 0}}))) std::cout << "pinv [[1,1],[0,0]] = " << r.format(*mp) << "\n";
  return 0;
}
