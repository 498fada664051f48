/// Enumerated finite *-rings.

#include "support.hpp"

using namespace bccore;
using namespace bccore::testing;

namespace {

const FiniteRing Z6 = FiniteRing::integers_mod(6);

ElementSet codes(std::vector<std::uint32_t> v) { return ElementSet(std::move(v)); }

}  // namespace

TEST(Elements, SmallRings) {
  const auto z2 = FiniteRing::integers_mod(2);
  std::vector<std::uint32_t> seen;
  for (auto x : z2.elements()) seen.push_back(x.code);
  EXPECT_EQ(seen, (std::vector<std::uint32_t>{0, 1}));
  seen.clear();
  for (auto x : Z6.elements()) seen.push_back(x.code);
  EXPECT_EQ(seen, (std::vector<std::uint32_t>{0, 1, 2, 3, 4, 5}));
}

TEST(Elements, MatricesRowMajorLexicographic) {
  const auto m = FiniteRing::matrices_mod(2, 2);
  EXPECT_EQ(m.order(), 16u);
  EXPECT_EQ(m.format(m.element(0)), "[[0,0],[0,0]]");
  EXPECT_EQ(m.format(m.element(1)), "[[0,0],[0,1]]");
  EXPECT_EQ(m.format(m.element(8)), "[[1,0],[0,0]]");
  EXPECT_EQ(m.format(m.element(15)), "[[1,1],[1,1]]");
  EXPECT_EQ(m.one(), m.element(9));
  EXPECT_EQ(FiniteRing::matrices_mod(3, 2).order(), 81u);
}

TEST(LeftIdeal, Examples) {
  EXPECT_EQ(Z6.left_ideal(z(1)), codes({0, 1, 2, 3, 4, 5}));
  EXPECT_EQ(Z6.left_ideal(z(2)), codes({0, 2, 4}));
  EXPECT_EQ(Z6.left_ideal(z(0)), codes({0}));
}

TEST(RightAnnihilator, Examples) {
  EXPECT_EQ(Z6.right_annihilator(z(0)).size(), 6u);
  EXPECT_EQ(Z6.right_annihilator(z(1)), codes({0}));
  EXPECT_EQ(Z6.right_annihilator(z(2)), codes({0, 3}));
}

TEST(LeftAnnihilator, Examples) {
  EXPECT_EQ(Z6.left_annihilator(z(0)).size(), 6u);
  EXPECT_EQ(Z6.left_annihilator(z(1)), codes({0}));
  EXPECT_EQ(Z6.left_annihilator(z(3)), codes({0, 2, 4}));
}

TEST(SetDirectSum, Examples) {
  EXPECT_EQ(Z6.set_direct_sum(codes({0, 2, 4}), codes({0, 3})), (DirectSumTest{true, true}));
  EXPECT_EQ(Z6.set_direct_sum(codes({0, 2, 4}), codes({0, 2, 4})), (DirectSumTest{false, false}));
  for (auto r : {Z6, FiniteRing::matrices_mod(2, 2)})
    EXPECT_EQ(r.set_direct_sum(r.left_ideal(r.one()), codes({0})), (DirectSumTest{true, true}));
}

TEST(SolveAll, Examples) {
  const auto two = z(2);
  const auto sols = Z6.solve_all([&](FiniteElement x) {
    return Z6.left_ideal(two).contains(x) && mul(Z6, two, x, Z6.one(), two) == two;
  });
  EXPECT_EQ(sols, codes({2}));
  EXPECT_TRUE(Z6.solve_all([](FiniteElement) { return false; }).empty());
  EXPECT_EQ(FiniteRing::integers_mod(2).solve_all([](FiniteElement) { return true; }), codes({0, 1}));
}

TEST(Solvers, MatchExhaustiveSearch) {
  for (auto r : {FiniteRing::integers_mod(12), FiniteRing::matrices_mod(2, 2)}) {
    for (auto m : r.elements()) {
      for (auto t : r.elements()) {
        const auto left = r.solve_left(m, t);
        const auto right = r.solve_right(m, t);
        bool any_left = false, any_right = false;
        for (auto x : r.elements()) {
          any_left = any_left || r.mul(x, m) == t;
          any_right = any_right || r.mul(m, x) == t;
        }
        ASSERT_EQ(left.has_value(), any_left);
        ASSERT_EQ(right.has_value(), any_right);
        if (left) {
          ASSERT_EQ(r.mul(*left, m), t);
        }
        if (right) {
          ASSERT_EQ(r.mul(m, *right), t);
        }
      }
    }
  }
}

TEST(InnerInverses, SmallestCodeIsCanonical) {
  for (auto a : Z6.elements()) {
    const auto all = Z6.inner_inverses(a);
    const auto g = Z6.inner_inverse(a);
    ASSERT_EQ(g.has_value(), !all.empty());
    if (g) {
      EXPECT_EQ(g->code, all.codes().front());
    }
  }
  EXPECT_EQ(FiniteRing::integers_mod(4).inner_inverse(z(2)), std::nullopt);
}

/// M_2(Z_2) as an enumerated ring and as matrices over GF(2) are the same
/// *-ring element by element.
TEST(Agreement, MatZp2MatchesPrimeFieldMatrices) {
  const auto fin = FiniteRing::matrices_mod(2, 2);
  const PrimeField f2(2);
  const MatrixRing<PrimeField> mat(f2, 2);
  auto to_mat = [&](FiniteElement x) {
    const auto e = fin.entries(x);
    auto m = mat.zero();
    for (std::size_t k = 0; k < 4; ++k) m(k / 2, k % 2) = e[k];
    return m;
  };
  for (auto x : fin.elements()) {
    ASSERT_EQ(to_mat(fin.star(x)), mat.star(to_mat(x)));
    for (auto y : fin.elements()) {
      ASSERT_EQ(to_mat(fin.mul(x, y)), mat.mul(to_mat(x), to_mat(y)));
      ASSERT_EQ(to_mat(fin.add(x, y)), mat.add(to_mat(x), to_mat(y)));
      ASSERT_EQ(fin.left_ideal_contains(x, y), mat.left_ideal_contains(to_mat(x), to_mat(y)));
      ASSERT_EQ(fin.right_ideal_contains(x, y), mat.right_ideal_contains(to_mat(x), to_mat(y)));
      ASSERT_EQ(fin.direct_sum_right_ideals(x, y), mat.direct_sum_right_ideals(to_mat(x), to_mat(y)));
      ASSERT_EQ(fin.direct_sum_left_ideals(x, y), mat.direct_sum_left_ideals(to_mat(x), to_mat(y)));
    }
  }
}

TEST(Agreement, DualCoreDecisionsMatchAcrossRepresentations) {
  const auto fin = FiniteRing::matrices_mod(2, 2);
  const MatrixRing<PrimeField> mat(PrimeField(2), 2);
  auto to_mat = [&](FiniteElement x) {
    const auto e = fin.entries(x);
    auto m = mat.zero();
    for (std::size_t k = 0; k < 4; ++k) m(k / 2, k % 2) = e[k];
    return m;
  };
  for (auto a : fin.elements())
    for (auto b : fin.elements())
      for (auto c : fin.elements())
        ASSERT_EQ(left_dual_bc_core(fin, a, b, c).has_value(),
                  left_dual_bc_core(mat, to_mat(a), to_mat(b), to_mat(c)).has_value());
}
