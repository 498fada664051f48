#pragma once

#include "bccore/bccore.hpp"

#include <gtest/gtest.h>

#include <initializer_list>
#include <string>

namespace bccore::testing {

using QRing = MatrixRing<RationalField>;
using QMat = Elem<QRing>;

inline QRing q_ring(std::size_t n) { return QRing(RationalField{}, n); }

/// Matrix from scalar strings, e.g. qm(r, {{"1/2", "0"}, {"0", "1"}}).
template <class Field>
Elem<MatrixRing<Field>> qm(const MatrixRing<Field>& r, std::initializer_list<std::initializer_list<const char*>> rows) {
  auto m = r.zero();
  std::size_t i = 0;
  for (const auto& row : rows) {
    std::size_t j = 0;
    for (const char* s : row) m(i, j++) = r.field().parse(s);
    ++i;
  }
  return m;
}

inline FiniteElement z(std::uint32_t code) { return {code}; }

}  // namespace bccore::testing
