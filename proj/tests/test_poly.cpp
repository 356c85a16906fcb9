#include <gtest/gtest.h>

#include "alia/error.hpp"
#include "support.hpp"

using namespace alia;
using namespace alia::test;

namespace {

const FieldSpec Q = FieldSpec::rational();

MultiPoly P(const std::string& s, std::size_t n = 3) { return parse_poly(s, n, Q); }

ReflectionData swap_data() { return *is_pseudo_reflection(swap_reflection()).data; }

std::size_t parse_error_position(const std::string& s, std::size_t n = 3) {
  try {
    parse_poly(s, n, Q);
  } catch (const ParseError& e) {
    return e.position();
  }
  ADD_FAILURE() << "no ParseError for " << s;
  return 0;
}

LinearAuto diag_last(unsigned m) {
  FieldSpec f = FieldSpec::cyclotomic(m);
  Matrix d = Matrix::identity(3, f);
  d(2, 2) = primitive_root(m);
  return LinearAuto(d);
}

}  // namespace

TEST(ParsePoly, Examples) {
  MultiPoly p = P("x1^2*x2 - 3*x3");
  EXPECT_EQ(p.terms().size(), 2u);
  EXPECT_EQ(p.coeff({2, 1, 0}), q(1));
  EXPECT_EQ(p.coeff({0, 0, 1}), q(-3));
  EXPECT_EQ(p.to_string(), "x1^2*x2 - 3*x3");
  EXPECT_TRUE(P("0").is_zero());
  EXPECT_EQ(P("0").to_string(), "0");
  MultiPoly two = P("x1 + x1");
  EXPECT_EQ(two.terms().size(), 1u);
  EXPECT_EQ(two.coeff({1, 0, 0}), q(2));
  EXPECT_EQ(P(" - x2 *x1 +1/2").to_string(), "-x1*x2 + 1/2");
  EXPECT_EQ(P("x1*x1*x1"), P("x1^3"));
  EXPECT_EQ(P("x1 - x1"), MultiPoly(3, Q));
}

TEST(ParsePoly, CyclotomicCoefficients) {
  FieldSpec f = FieldSpec::cyclotomic(3);
  MultiPoly p = parse_poly("[0,1;3]*x1 + x2", 2, f);
  EXPECT_EQ(p.coeff({1, 0}), primitive_root(3));
  EXPECT_EQ(parse_poly(p.to_string(), 2, f), p);
}

TEST(ParsePoly, RoundTrip) {
  Gen gen(2);
  for (int k = 0; k < 100; ++k) {
    MultiPoly p = gen.polynomial(3, 6, 5);
    EXPECT_EQ(P(p.to_string()), p) << p.to_string();
  }
}

TEST(ParsePoly, ErrorPositions) {
  EXPECT_EQ(parse_error_position("x4"), 0u);
  EXPECT_EQ(parse_error_position("2*x1 + x9"), 7u);
  EXPECT_EQ(parse_error_position("x1 + * x2"), 5u);
  EXPECT_EQ(parse_error_position("x1 +"), 4u);
  EXPECT_EQ(parse_error_position("x1 ^"), 4u);
  EXPECT_EQ(parse_error_position("y1"), 0u);
  EXPECT_EQ(parse_error_position("x0"), 0u);
  EXPECT_EQ(parse_error_position(""), 0u);
  EXPECT_THROW(P("x1^99999999999"), ParseError);
  EXPECT_THROW(P("1/0"), ParseError);
}

TEST(MultiPoly, GrlexOrderAndArithmetic) {
  MultiPoly p = P("x3^2 + x1*x2 + x1^2 + x2");
  EXPECT_EQ(p.to_string(), "x1^2 + x1*x2 + x3^2 + x2");
  EXPECT_EQ(p.leading_term().first, (Exponents{2, 0, 0}));
  EXPECT_EQ(p.total_degree(), 2);
  EXPECT_EQ(MultiPoly(3, Q).total_degree(), -1);
  EXPECT_THROW(MultiPoly(3, Q).leading_term(), DomainError);
  EXPECT_EQ((P("x1 + x2") * P("x1 - x2")), P("x1^2 - x2^2"));
  EXPECT_EQ(P("x1 + 1").pow(3), P("x1^3 + 3*x1^2 + 3*x1 + 1"));
  EXPECT_THROW(P("x1") + P("x1", 2), ShapeError);
}

TEST(MultiPoly, Division) {
  auto [quot, rem] = P("x1^3 - x2^3").divide(P("x1 - x2"));
  EXPECT_EQ(quot, P("x1^2 + x1*x2 + x2^2"));
  EXPECT_TRUE(rem.is_zero());
  auto [q2, r2] = P("x1^2 + x3").divide(P("x1"));
  EXPECT_EQ(q2, P("x1"));
  EXPECT_EQ(r2, P("x3"));
  EXPECT_THROW(P("x1").divide(MultiPoly(3, Q)), DomainError);
}

TEST(ApplyAuto, Examples) {
  LinearAuto s = swap_reflection();
  EXPECT_EQ(apply_auto(s, P("x1")), P("x2"));
  EXPECT_EQ(apply_auto(s, P("x1*x2")), P("x1*x2"));
  EXPECT_EQ(apply_auto(s, P("x1^2*x3 + 5")), P("x2^2*x3 + 5"));
  LinearAuto id(Matrix::identity(3, Q));
  EXPECT_EQ(apply_auto(id, P("x1^2*x3 - x2")), P("x1^2*x3 - x2"));
  EXPECT_THROW(apply_auto(s, P("x1", 2)), ShapeError);
}

TEST(ApplyAuto, RowIsImage) {
  LinearAuto r(matrix_of({{1, 2, 0}, {0, 1, 0}, {0, 0, 3}}));
  EXPECT_EQ(apply_auto(r, P("x1")), P("x1 + 2*x2"));
  EXPECT_EQ(apply_auto(r, P("x3^2")), P("9*x3^2"));
}

TEST(LinearAuto, Preconditions) {
  EXPECT_THROW(LinearAuto(matrix_of({{1, 2}})), ShapeError);
  EXPECT_THROW(LinearAuto(matrix_of({{1, 2}, {2, 4}})), DomainError);
}

TEST(PseudoReflection, Swap) {
  ReflectionResult r = is_pseudo_reflection(swap_reflection());
  ASSERT_TRUE(r.is_reflection);
  EXPECT_TRUE(r.reason.empty());
  EXPECT_EQ(r.data->order, 2u);
  EXPECT_EQ(r.data->l_r, P("x1 - x2"));
  EXPECT_EQ(r.data->delta_r, (Vector{q(1), q(-1), q(0)}));
  EXPECT_EQ(r.data->omega, q(-1));
}

TEST(PseudoReflection, DiagonalRootsOfUnity) {
  for (unsigned m : {2u, 3u, 4u, 6u}) {
    ReflectionResult r = is_pseudo_reflection(diag_last(m));
    ASSERT_TRUE(r.is_reflection) << m;
    EXPECT_EQ(r.data->order, m);
    EXPECT_EQ(r.data->omega, primitive_root(m));
    EXPECT_EQ(r.data->l_r, MultiPoly::variable(3, 2, FieldSpec::cyclotomic(m)));
  }
}

TEST(PseudoReflection, Rejections) {
  ReflectionResult id = is_pseudo_reflection(LinearAuto(Matrix::identity(3, Q)));
  EXPECT_FALSE(id.is_reflection);
  EXPECT_EQ(id.reason, "rank(I - R) = 0, not 1");
  EXPECT_FALSE(id.data.has_value());

  FieldSpec f = FieldSpec::cyclotomic(3);
  Matrix d = Matrix::identity(3, f);
  d(0, 0) = d(1, 1) = primitive_root(3);
  ReflectionResult two = is_pseudo_reflection(LinearAuto(d));
  EXPECT_FALSE(two.is_reflection);
  EXPECT_EQ(two.reason, "rank(I - R) = 2, not 1");

  ReflectionResult inf = is_pseudo_reflection(LinearAuto(matrix_of({{1, 0}, {0, 2}})));
  EXPECT_FALSE(inf.is_reflection);
  EXPECT_EQ(inf.reason, "R^m != I for every m <= 24");
}

TEST(PseudoReflection, OrderBoundAndHint) {
  EXPECT_FALSE(is_pseudo_reflection(diag_last(6), 5).is_reflection);
  FieldSpec f = FieldSpec::cyclotomic(6);
  Matrix d = Matrix::identity(3, f);
  d(2, 2) = primitive_root(6);
  EXPECT_TRUE(is_pseudo_reflection(LinearAuto(d, 6u), 5).is_reflection);
  EXPECT_THROW(LinearAuto(d, 0u), DomainError);
}

TEST(PseudoReflection, DualAgrees) {
  std::vector<LinearAuto> cases{swap_reflection(), diag_last(3), LinearAuto(Matrix::identity(2, Q)),
                                LinearAuto(matrix_of({{1, 1}, {0, 1}})),
                                LinearAuto(matrix_of({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}))};
  for (const auto& r : cases)
    EXPECT_EQ(is_pseudo_reflection(r).is_reflection, is_pseudo_reflection(dual_auto(r)).is_reflection);
}

TEST(TwistedDerivation, SwapValues) {
  ReflectionData rd = swap_data();
  LinearAuto s = swap_reflection();
  EXPECT_EQ(twisted_derivation(rd, s, P("x1")), P("1"));
  EXPECT_EQ(twisted_derivation(rd, s, P("x2")), P("-1"));
  EXPECT_TRUE(twisted_derivation(rd, s, P("x3")).is_zero());
  EXPECT_TRUE(twisted_derivation(rd, s, P("7")).is_zero());
  EXPECT_EQ(twisted_derivation(rd, s, P("x2^4")), P("-x1^3 - x1^2*x2 - x1*x2^2 - x2^3"));
}

TEST(TwistedDerivation, PowersOfX1AndX2) {
  ReflectionData rd = swap_data();
  LinearAuto s = swap_reflection();
  for (unsigned n = 1; n <= 8; ++n) {
    MultiPoly sum(3, Q);
    for (unsigned k = 0; k < n; ++k) sum.add_term({n - 1 - k, k, 0}, q(1));
    MultiPoly x1n = MultiPoly::monomial({n, 0, 0}, q(1)), x2n = MultiPoly::monomial({0, n, 0}, q(1));
    EXPECT_EQ(twisted_derivation(rd, s, x1n), sum) << n;
    EXPECT_EQ(twisted_derivation(rd, s, x2n), -sum) << n;
    EXPECT_EQ(twisted_derivation(rd, s, x1n), oracle_twisted_derivation(rd, s, x1n));
  }
}

TEST(TwistedDerivation, MismatchedDataThrows) {
  ReflectionData rd = swap_data();
  LinearAuto other(matrix_of({{1, 0, 0}, {0, 1, 0}, {0, 0, -1}}));
  EXPECT_THROW(twisted_derivation(rd, other, P("x3")), ConsistencyError);
}

TEST(TwistedDerivation, Zeta3) {
  LinearAuto r = diag_last(3);
  ReflectionData rd = *is_pseudo_reflection(r).data;
  FieldSpec f = FieldSpec::cyclotomic(3);
  MultiPoly g = parse_poly("x3^3 + x1*x3", 3, f);
  EXPECT_EQ(twisted_derivation(rd, r, g).to_string(), "[1,-1;3]*x1");
  EXPECT_EQ(twisted_derivation(rd, r, g), oracle_twisted_derivation(rd, r, g));
}

TEST(Bracket, SwapExamples) {
  ReflectionData rd = swap_data();
  LinearAuto s = swap_reflection();
  EXPECT_EQ(poly_alia_bracket(rd, s, P("x1"), P("x2")), P("-2*x1"));
  // Intro variant is the theorem variant with arguments exchanged.
  EXPECT_EQ(poly_alia_bracket(rd, s, P("x1"), P("x2"), BracketVariant::intro),
            poly_alia_bracket(rd, s, P("x2"), P("x1")));
  Gen gen(4);
  for (int k = 0; k < 20; ++k) {
    MultiPoly f = gen.polynomial(3, 4, 3), g = gen.polynomial(3, 4, 3);
    MultiPoly df = twisted_derivation(rd, s, f);
    EXPECT_EQ(poly_alia_bracket(rd, s, f, f), rd.l_r * df * df);
    EXPECT_EQ(poly_alia_bracket(rd, s, q(2) * f, g), q(2) * poly_alia_bracket(rd, s, f, g));
  }
}

TEST(LieTriple, SwapExamples) {
  ReflectionData rd = swap_data();
  LinearAuto s = swap_reflection();
  MultiPoly x1 = P("x1"), x2 = P("x2"), x3 = P("x3");
  EXPECT_TRUE(poly_lie_triple(rd, s, x1, x1, x3).is_zero());
  MultiPoly cyc = poly_lie_triple(rd, s, x1, x2, x3) + poly_lie_triple(rd, s, x2, x3, x1) +
                  poly_lie_triple(rd, s, x3, x1, x2);
  EXPECT_TRUE(cyc.is_zero());
  // Derived by expansion: [x1,x2] - [x2,x1] = -2(x1 + x2), an invariant with
  // D = 0, so [x1,x2,h] = -(x1 + x2) D(h).
  EXPECT_TRUE(poly_lie_triple(rd, s, x1, x2, x3).is_zero());
  EXPECT_EQ(poly_lie_triple(rd, s, x1, x2, x1), P("-x1 - x2"));
}

TEST(Invariance, SwapExamples) {
  std::vector<LinearAuto> gens{swap_reflection()};
  EXPECT_TRUE(invariance_check(P("x1 + x2"), gens));
  EXPECT_TRUE(invariance_check(P("x1*x2"), gens));
  EXPECT_FALSE(invariance_check(P("x1"), gens));
  EXPECT_TRUE(invariance_check(P("x1"), {}));
  gens.push_back(LinearAuto(matrix_of({{1, 0, 0}, {0, 1, 0}, {0, 0, -1}})));
  EXPECT_TRUE(invariance_check(P("x1^2 + x2^2 + x3^2"), gens));
  EXPECT_FALSE(invariance_check(P("x1 + x2 + x3"), gens));
}

namespace {

/// K[x1,x2,x3] -> K[x1,x3]/(x1^4, x3^2) via x2 -> -x1, coordinates on x1^a x3^b
/// in the order index = 2a + b.
Vector reduce(const MultiPoly& f) {
  Vector out = zero_vector(8, Q);
  for (const auto& [e, c] : f.terms()) {
    unsigned a = e[0] + e[1], b = e[2];
    if (a >= 4 || b >= 2) continue;
    Scalar sign = (e[1] % 2) ? q(-1) : q(1);
    out[2 * a + b] += sign * c;
  }
  return out;
}

MultiPoly representative(std::size_t k) {
  return MultiPoly::monomial({static_cast<std::uint32_t>(k / 2), 0, static_cast<std::uint32_t>(k % 2)},
                             q(1));
}

}  // namespace

TEST(SpecialForm, SpecialBracketOnQuotient) {
  // The ideal (x1+x2, (x1x2)^2, x3^2) is stable under R and D, so everything
  // descends to the 8-dimensional quotient, where the twisted bracket must be
  // the special left-Alia bracket x.2D(y) - D(x.y).
  ReflectionData rd = swap_data();
  LinearAuto s = swap_reflection();
  AlgebraSC assoc(8, Q), twisted(8, Q);
  Matrix d(8, 8, Q);
  for (std::size_t i = 0; i < 8; ++i) {
    Vector di = reduce(twisted_derivation(rd, s, representative(i)));
    for (std::size_t t = 0; t < 8; ++t) d(t, i) = di[t];
    for (std::size_t j = 0; j < 8; ++j) {
      assoc.set_product(i, j, reduce(representative(i) * representative(j)));
      twisted.set_product(i, j, reduce(poly_alia_bracket(rd, s, representative(i), representative(j))));
    }
  }
  EXPECT_TRUE(check_commutative(assoc).passed());
  EXPECT_TRUE(check_associative(assoc).passed());
  EXPECT_EQ(twisted, special_left_alia(assoc, q(2) * d, -d));
  EXPECT_TRUE(check_alia(twisted).passed());
  EXPECT_FALSE(twisted == AlgebraSC(8, Q));
}
