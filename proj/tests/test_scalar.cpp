#include <gtest/gtest.h>

#include "alia/error.hpp"
#include "alia/matrix.hpp"
#include "support.hpp"

using namespace alia;
using alia::test::q;

namespace {

std::vector<Integer> ints(std::initializer_list<long> xs) {
  std::vector<Integer> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

FieldSpec cyc(unsigned m) { return FieldSpec::cyclotomic(m); }

}  // namespace

TEST(Rational, LowestTermsAndSum) {
  Scalar a = q(1, 2) + q(1, 3);
  EXPECT_EQ(a, q(5, 6));
  EXPECT_EQ(q(4, -6).to_string(), "-2/3");
  EXPECT_EQ(q(6, 3).to_string(), "2");
}

TEST(Rational, DivisionByZeroThrows) {
  EXPECT_THROW(q(1) / q(0), DomainError);
  EXPECT_THROW(q(0).inverse(), DomainError);
}

TEST(Cyclotomic, Polynomials) {
  EXPECT_EQ(cyclotomic_polynomial(1), ints({-1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(2), ints({1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(3), ints({1, 1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(4), ints({1, 0, 1}));
  EXPECT_EQ(cyclotomic_polynomial(6), ints({1, -1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(12), ints({1, 0, -1, 0, 1}));
  EXPECT_EQ(cyclotomic_polynomial(9), ints({1, 0, 0, 1, 0, 0, 1}));
}

TEST(Cyclotomic, ZetaFourSquaredIsMinusOne) {
  Scalar z = primitive_root(4);
  EXPECT_EQ(z * z, Scalar(Rational(-1), cyc(4)));
}

TEST(Cyclotomic, ZetaTwoIsMinusOne) {
  EXPECT_EQ(primitive_root(2), Scalar(Rational(-1), cyc(2)));
  EXPECT_TRUE(primitive_root(2).is_rational_value());
}

TEST(Cyclotomic, ZetaThreeRelation) {
  Scalar z = primitive_root(3);
  EXPECT_TRUE((z * z + z + Scalar::one(cyc(3))).is_zero());
}

TEST(Cyclotomic, PrimitiveRootOrders) {
  for (unsigned m = 2; m <= 24; ++m) {
    Scalar z = primitive_root(m);
    for (unsigned k = 1; k < m; ++k) EXPECT_FALSE(z.pow(k).is_one()) << m << " " << k;
    EXPECT_TRUE(z.pow(m).is_one()) << m;
    EXPECT_EQ(multiplicative_order(z, 24), m);
    EXPECT_EQ(z.inverse(), z.pow(m - 1));
  }
  EXPECT_EQ(multiplicative_order(primitive_root(30), 24), 0u);
  EXPECT_THROW(primitive_root(1), DomainError);
}

TEST(Cyclotomic, InverseOfNonUnitElement) {
  FieldSpec f = cyc(5);
  Scalar z = primitive_root(5);
  Scalar a = Scalar::one(f) + q(2).embed(f) * z - z.pow(3);
  EXPECT_TRUE((a * a.inverse()).is_one());
}

TEST(Cyclotomic, MixedFieldsThrow) {
  EXPECT_THROW(primitive_root(3) + primitive_root(4), DomainError);
  EXPECT_THROW(primitive_root(3) + q(1), DomainError);
  EXPECT_THROW((void)(primitive_root(3) == q(1)), DomainError);
}

TEST(Cyclotomic, EmbeddingIsHomomorphism) {
  FieldSpec f = cyc(7);
  Scalar a = q(3, 4), b = q(-5, 2);
  EXPECT_EQ((a * b).embed(f), a.embed(f) * b.embed(f));
  EXPECT_EQ((a + b).embed(f), a.embed(f) + b.embed(f));
  EXPECT_THROW(primitive_root(7).embed(FieldSpec::rational()), DomainError);
}

TEST(Parse, ScalarRoundTrip) {
  FieldSpec f = cyc(3);
  for (const char* text : {"[1,-1/2;3]", "[0,1;3]", "[5,0;3]"}) {
    Scalar s = parse_scalar(text, f);
    EXPECT_EQ(parse_scalar(s.to_string(), f), s);
  }
  EXPECT_EQ(parse_scalar("-7/14", FieldSpec::rational()), q(-1, 2));
  EXPECT_EQ(parse_scalar("2", f), q(2).embed(f));
}

TEST(Parse, ScalarErrors) {
  EXPECT_THROW(parse_scalar("", FieldSpec::rational()), ParseError);
  EXPECT_THROW(parse_scalar("1/0", FieldSpec::rational()), ParseError);
  EXPECT_THROW(parse_scalar("1x", FieldSpec::rational()), ParseError);
  EXPECT_THROW(parse_scalar("[1,2;4]", cyc(3)), DomainError);
  try {
    parse_scalar("12a", FieldSpec::rational());
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 2u);
  }
}

TEST(Parse, FieldSpec) {
  EXPECT_EQ(FieldSpec::parse("rational"), FieldSpec::rational());
  EXPECT_EQ(FieldSpec::parse("cyclotomic:6"), cyc(6));
  EXPECT_EQ(cyc(6).degree(), 2u);
  EXPECT_THROW(FieldSpec::parse("reals"), ParseError);
  EXPECT_THROW(FieldSpec::parse("cyclotomic:x"), ParseError);
}

TEST(Matrix, DeterminantInverseRank) {
  Matrix m = test::matrix_of({{2, 1, 0}, {1, 3, 1}, {0, 1, 4}});
  EXPECT_EQ(determinant(m), q(18));
  auto inv = inverse(m);
  ASSERT_TRUE(inv.has_value());
  EXPECT_EQ(*inv * m, Matrix::identity(3, FieldSpec::rational()));
  EXPECT_EQ(rank(m), 3u);
  Matrix s = test::matrix_of({{1, 2}, {2, 4}});
  EXPECT_FALSE(inverse(s).has_value());
  EXPECT_EQ(rank(s), 1u);
  EXPECT_TRUE(determinant(s).is_zero());
}

TEST(Matrix, CyclotomicRank) {
  FieldSpec f = cyc(3);
  Matrix m = Matrix::identity(3, f);
  m(2, 2) = primitive_root(3);
  EXPECT_EQ(rank(Matrix::identity(3, f) - m), 1u);
  EXPECT_EQ(power(m, 3), Matrix::identity(3, f));
}

TEST(Matrix, ShapeErrors) {
  Matrix a = test::matrix_of({{1, 2}});
  EXPECT_THROW(a * a, ShapeError);
  EXPECT_THROW(determinant(a), ShapeError);
  EXPECT_THROW(Matrix::from_rows({{q(1)}, {q(1), q(2)}}, FieldSpec::rational()), ShapeError);
}
