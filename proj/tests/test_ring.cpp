/// The *-ring contract: involution laws, projections, idempotents, Pierce
/// blocks and descriptors.

#include "support.hpp"

#include <random>

using namespace bccore;
using namespace bccore::testing;

namespace {

const QRing R2 = q_ring(2);

/// Checks (x*)* = x, (xy)* = y*x*, (x+y)* = x*+y* on every pair of `xs`.
template <StarRing R>
void expect_involution_laws(const R& r, const std::vector<Elem<R>>& xs) {
  for (const auto& x : xs) {
    ASSERT_TRUE(r.star(r.star(x)) == x) << r.format(x);
    for (const auto& y : xs) {
      ASSERT_TRUE(r.star(r.mul(x, y)) == r.mul(r.star(y), r.star(x))) << r.format(x) << " " << r.format(y);
      ASSERT_TRUE(r.star(r.add(x, y)) == r.add(r.star(x), r.star(y)));
    }
  }
  ASSERT_TRUE(r.star(r.one()) == r.one());
}

template <class Field>
std::vector<Elem<MatrixRing<Field>>> random_elements(const MatrixRing<Field>& r, unsigned count, std::uint64_t seed,
                                                     const std::vector<std::string>& scalars) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, scalars.size() - 1);
  std::vector<Elem<MatrixRing<Field>>> out;
  for (unsigned k = 0; k < count; ++k) {
    auto m = r.zero();
    for (std::size_t i = 0; i < r.dimension(); ++i)
      for (std::size_t j = 0; j < r.dimension(); ++j) m(i, j) = r.field().parse(scalars[pick(rng)]);
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace

TEST(Star, Examples) {
  EXPECT_EQ(R2.star(R2.one()), R2.one());
  EXPECT_EQ(R2.star(R2.make({{1, 2}, {3, 4}})), R2.make({{1, 3}, {2, 4}}));
  const auto z6 = FiniteRing::integers_mod(6);
  EXPECT_EQ(z6.star(z(4)), z(4));
}

TEST(Star, ConjugateTranspose) {
  const MatrixRing<GaussianRationalField> c2(GaussianRationalField{}, 2, Involution::conjugate_transpose);
  const auto x = qm(c2, {{"1+i", "2"}, {"-3i", "1/2"}});
  EXPECT_EQ(c2.star(x), qm(c2, {{"1-i", "3i"}, {"2", "1/2"}}));
}

TEST(InvolutionLaws, Rationals) {
  expect_involution_laws(q_ring(3), random_elements(q_ring(3), 12, 1, {"0", "1", "-2", "1/3", "5/2"}));
}

TEST(InvolutionLaws, GaussianBothInvolutions) {
  for (auto inv : {Involution::transpose, Involution::conjugate_transpose}) {
    const MatrixRing<GaussianRationalField> r(GaussianRationalField{}, 2, inv);
    expect_involution_laws(r, random_elements(r, 12, 2, {"0", "i", "1-i", "-1/2+3i", "2"}));
  }
}

TEST(InvolutionLaws, PrimeField) {
  const MatrixRing<PrimeField> r(PrimeField(7), 3);
  expect_involution_laws(r, random_elements(r, 12, 3, {"0", "1", "2", "3", "4", "5", "6"}));
}

TEST(InvolutionLaws, FiniteRingsExhaustive) {
  for (auto r : {FiniteRing::integers_mod(12), FiniteRing::matrices_mod(2, 2), FiniteRing::matrices_mod(3, 2)}) {
    std::vector<FiniteElement> xs(r.elements().begin(), r.elements().end());
    expect_involution_laws(r, xs);
  }
}

TEST(IsProjection, Examples) {
  EXPECT_TRUE(is_projection(R2, R2.make({{1, 0}, {0, 0}})));
  EXPECT_FALSE(is_projection(R2, R2.make({{1, 1}, {0, 0}})));
  EXPECT_TRUE(is_projection(FiniteRing::integers_mod(6), z(3)));
}

TEST(IsIdempotent, Examples) {
  EXPECT_TRUE(is_idempotent(R2, R2.one()));
  EXPECT_TRUE(is_idempotent(R2, R2.make({{1, 1}, {0, 0}})));
  EXPECT_FALSE(is_idempotent(FiniteRing::integers_mod(6), z(2)));
}

TEST(PierceBlocks, DiagonalIdempotent) {
  const auto b = pierce_blocks(R2, R2.make({{1, 2}, {3, 4}}), R2.make({{1, 0}, {0, 0}}));
  EXPECT_EQ(b.a1, R2.make({{1, 0}, {0, 0}}));
  EXPECT_EQ(b.a2, R2.make({{0, 2}, {0, 0}}));
  EXPECT_EQ(b.a3, R2.make({{0, 0}, {3, 0}}));
  EXPECT_EQ(b.a4, R2.make({{0, 0}, {0, 4}}));
}

TEST(PierceBlocks, UnitAndZeroIdempotents) {
  const auto a = R2.make({{5, -1}, {2, 7}});
  const auto one = pierce_blocks(R2, a, R2.one());
  EXPECT_EQ(one.a1, a);
  EXPECT_EQ(one.a2, R2.zero());
  EXPECT_EQ(one.a3, R2.zero());
  EXPECT_EQ(one.a4, R2.zero());
  const auto zero = pierce_blocks(R2, a, R2.zero());
  EXPECT_EQ(zero.a4, a);
  EXPECT_EQ(zero.a1, R2.zero());
  EXPECT_EQ(zero.a2, R2.zero());
  EXPECT_EQ(zero.a3, R2.zero());
}

TEST(PierceBlocks, RejectsNonIdempotent) {
  EXPECT_THROW(pierce_blocks(R2, R2.one(), R2.make({{2, 0}, {0, 0}})), NotIdempotent);
  EXPECT_THROW(pierce_blocks(FiniteRing::integers_mod(6), z(1), z(2)), NotIdempotent);
}

/// a = a1 + a2 + a3 + a4 for every a and every idempotent p.
TEST(PierceBlocks, ReconstructionExhaustive) {
  for (auto r : {FiniteRing::integers_mod(12), FiniteRing::matrices_mod(2, 2), FiniteRing::matrices_mod(3, 2)}) {
    for (auto p : r.elements()) {
      if (!is_idempotent(r, p)) continue;
      for (auto a : r.elements()) ASSERT_EQ(reconstruct(r, pierce_blocks(r, a, p)), a);
    }
  }
}

TEST(PierceBlocks, ReconstructionRational) {
  const auto r3 = q_ring(3);
  const auto p = qm(r3, {{"1", "1/2", "0"}, {"0", "0", "0"}, {"0", "-3", "1"}});
  ASSERT_TRUE(is_idempotent(r3, p));
  for (const auto& a : random_elements(r3, 20, 4, {"0", "1", "-1", "2/3", "7"}))
    EXPECT_EQ(reconstruct(r3, pierce_blocks(r3, a, p)), a);
}

TEST(RingMembership, MismatchedElementsRejected) {
  const auto z6 = FiniteRing::integers_mod(6);
  EXPECT_THROW(z6.element(6), RingMismatch);
  EXPECT_THROW(verify(z6, InverseKind::inner, InverseInputs<FiniteElement>::element(z(1)), z(9)), RingMismatch);
  const auto r3 = q_ring(3);
  EXPECT_THROW(left_dual_core(r3, R2.one()), RingMismatch);
}

TEST(RingDescriptor, CanonicalStrings) {
  EXPECT_EQ(FiniteRing::integers_mod(6).descriptor().to_string(), "Zn:6");
  EXPECT_EQ(FiniteRing::matrices_mod(3, 2).descriptor().to_string(), "MatZp:2x2:p3");
  EXPECT_EQ(q_ring(3).descriptor().to_string(), "Mat:Q:3");
  EXPECT_EQ(MatrixRing<PrimeField>(PrimeField(7), 2).descriptor().to_string(), "Mat:GF7:2");
  EXPECT_EQ(MatrixRing<GaussianRationalField>(GaussianRationalField{}, 2, Involution::conjugate_transpose).descriptor().to_string(),
            "Mat:QI:2:ct");
}

TEST(RingDescriptor, OutsideCatalogueRejected) {
  RingDescriptor d;
  d.kind = RingDescriptor::Kind::matzp;
  d.characteristic = 5;
  d.dimension = 2;
  d.involution = Involution::transpose;
  EXPECT_THROW(d.validate(), std::invalid_argument);
  EXPECT_THROW(FiniteRing::integers_mod(1), std::invalid_argument);
  EXPECT_THROW(MatrixRing<RationalField>(RationalField{}, 2, Involution::conjugate_transpose), std::invalid_argument);
}
