/// Scalar grammar and field arithmetic.

#include "support.hpp"

using namespace bccore;

TEST(RationalField, ParsesIntegersAndFractions) {
  const RationalField f;
  EXPECT_EQ(f.parse("7"), mpq_class(7));
  EXPECT_EQ(f.parse("-3/6"), mpq_class(-1, 2));
  EXPECT_EQ(f.parse("+4/2"), mpq_class(2));
  EXPECT_EQ(f.format(f.parse("10/4")), "5/2");
  EXPECT_EQ(f.format(f.parse("0/5")), "0");
}

TEST(RationalField, RejectsMalformedScalars) {
  const RationalField f;
  EXPECT_THROW(f.parse("1/0"), ScalarParseError);
  EXPECT_THROW(f.parse(""), ScalarParseError);
  EXPECT_THROW(f.parse("1/"), ScalarParseError);
  EXPECT_THROW(f.parse("1/-2"), ScalarParseError);
  EXPECT_THROW(f.parse("0.5"), ScalarParseError);
  EXPECT_THROW(f.parse("x"), ScalarParseError);
}

TEST(GaussianRationalField, ParsesEveryForm) {
  const GaussianRationalField f;
  EXPECT_EQ(f.parse("3"), (GaussianRational{3, 0}));
  EXPECT_EQ(f.parse("2i"), (GaussianRational{0, 2}));
  EXPECT_EQ(f.parse("-i"), (GaussianRational{0, -1}));
  EXPECT_EQ(f.parse("1/2+3i"), (GaussianRational{mpq_class(1, 2), 3}));
  EXPECT_EQ(f.parse("1-1/3i"), (GaussianRational{1, mpq_class(-1, 3)}));
  EXPECT_THROW(f.parse("1+1/0i"), ScalarParseError);
}

TEST(GaussianRationalField, FormatRoundTrips) {
  const GaussianRationalField f;
  for (const char* s : {"0", "5", "-2i", "1/2+3i", "-1-1/3i", "i"}) EXPECT_EQ(f.parse(f.format(f.parse(s))), f.parse(s)) << s;
  EXPECT_EQ(f.format(f.parse("1/2+3i")), "1/2+3i");
}

TEST(GaussianRationalField, InverseAndConjugate) {
  const GaussianRationalField f;
  const auto x = f.parse("1+2i");
  EXPECT_EQ(f.mul(x, f.inv(x)), f.one());
  EXPECT_EQ(f.mul(x, f.conj(x)), f.from_int(5));
  EXPECT_THROW(f.inv(f.zero()), std::domain_error);
}

TEST(PrimeField, ReducesAndInverts) {
  const PrimeField f(7);
  EXPECT_EQ(f.parse("-1"), 6u);
  EXPECT_EQ(f.parse("15"), 1u);
  for (std::uint32_t x = 1; x < 7; ++x) EXPECT_EQ(f.mul(x, f.inv(x)), 1u) << x;
  EXPECT_THROW(f.parse("1/2"), ScalarParseError);
  EXPECT_THROW(PrimeField(6), std::invalid_argument);
}
