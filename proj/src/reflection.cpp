#include "alia/reflection.hpp"

#include <algorithm>
#include <utility>

#include "alia/error.hpp"

namespace alia {

namespace {

void require_poly(const LinearAuto& r, const MultiPoly& f, const char* what) {
  if (f.nvars() != r.nvars())
    throw ShapeError(std::string(what) + ": polynomial has " + std::to_string(f.nvars()) +
                     " variables, automorphism acts on " + std::to_string(r.nvars()));
  if (!(f.field() == r.field())) throw DomainError(std::string(what) + ": field mismatch");
}

MultiPoly linear_form(const Vector& coeffs, const FieldSpec& field) {
  MultiPoly out(coeffs.size(), field);
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    Exponents e(coeffs.size(), 0);
    e[j] = 1;
    out.add_term(e, coeffs[j]);
  }
  return out;
}

}  // namespace

LinearAuto::LinearAuto(Matrix matrix, std::optional<unsigned> order_hint)
    : matrix_(std::move(matrix)), order_hint_(order_hint) {
  if (!matrix_.is_square()) throw ShapeError("automorphism matrix must be square");
  if (determinant(matrix_).is_zero()) throw DomainError("automorphism matrix is singular");
  if (order_hint_ && *order_hint_ == 0) throw DomainError("order hint must be positive");
}

MultiPoly apply_auto(const LinearAuto& r, const MultiPoly& f) {
  require_poly(r, f, "apply_auto");
  const std::size_t n = r.nvars();
  const FieldSpec& field = r.field();
  std::vector<MultiPoly> images;
  images.reserve(n);
  for (std::size_t i = 0; i < n; ++i) images.push_back(linear_form(r.matrix().row(i), field));

  MultiPoly out(n, field);
  for (const auto& [e, c] : f.terms()) {
    MultiPoly term = MultiPoly::constant(n, c);
    for (std::size_t i = 0; i < n; ++i)
      if (e[i] > 0) term = term * images[i].pow(e[i]);
    out += term;
  }
  return out;
}

LinearAuto dual_auto(const LinearAuto& r) {
  auto inv = inverse(r.matrix());
  if (!inv) throw DomainError("dual_auto: singular matrix");
  return LinearAuto(inv->transpose(), r.order_hint());
}

ReflectionResult is_pseudo_reflection(const LinearAuto& r, unsigned max_order) {
  ReflectionResult result;
  const std::size_t n = r.nvars();
  const FieldSpec& field = r.field();
  Matrix i_minus_r = Matrix::identity(n, field) - r.matrix();
  std::size_t rk = rank(i_minus_r);
  if (rk != 1) {
    result.reason = "rank(I - R) = " + std::to_string(rk) + ", not 1";
    return result;
  }

  unsigned bound = std::max(max_order, r.order_hint().value_or(0));
  Matrix id = Matrix::identity(n, field);
  Matrix p = r.matrix();
  unsigned order = 0;
  for (unsigned m = 1; m <= bound; ++m) {
    if (p == id) {
      order = m;
      break;
    }
    p = p * r.matrix();
  }
  if (order == 0) {
    result.reason = "R^m != I for every m <= " + std::to_string(bound);
    return result;
  }

  // Every row of I - R is a multiple of one row; scale it so its first
  // nonzero entry is 1.
  std::size_t pivot_row = 0, pivot_col = 0;
  bool found = false;
  for (std::size_t i = 0; i < n && !found; ++i)
    for (std::size_t j = 0; j < n && !found; ++j)
      if (!i_minus_r(i, j).is_zero()) {
        pivot_row = i;
        pivot_col = j;
        found = true;
      }
  Vector l = i_minus_r.row(pivot_row);
  Scalar scale = l[pivot_col].inverse();
  l = scale * l;
  Vector delta(n, Scalar::zero(field));
  for (std::size_t i = 0; i < n; ++i) delta[i] = i_minus_r(i, pivot_col);

  Scalar trace = Scalar::zero(field);
  for (std::size_t i = 0; i < n; ++i) trace += r.matrix()(i, i);

  ReflectionData data;
  data.l_r = linear_form(l, field);
  data.delta_r = std::move(delta);
  data.order = order;
  data.omega = trace - Scalar(Rational(static_cast<long>(n) - 1), field);
  result.is_reflection = true;
  result.data = std::move(data);
  return result;
}

MultiPoly twisted_derivation(const ReflectionData& rd, const LinearAuto& r, const MultiPoly& f) {
  require_poly(r, f, "twisted_derivation");
  require_poly(r, rd.l_r, "twisted_derivation");
  auto [q, rem] = (f - apply_auto(r, f)).divide(rd.l_r);
  if (!rem.is_zero())
    throw ConsistencyError("twisted_derivation: f - R(f) is not divisible by l_R (remainder " +
                           rem.to_string() + ")");
  return q;
}

MultiPoly poly_alia_bracket(const ReflectionData& rd, const LinearAuto& r, const MultiPoly& f,
                            const MultiPoly& g, BracketVariant variant) {
  MultiPoly df = twisted_derivation(rd, r, f);
  MultiPoly dg = twisted_derivation(rd, r, g);
  if (variant == BracketVariant::theorem) return f * dg - apply_auto(r, g) * df;
  return df * g - apply_auto(r, f) * dg;
}

MultiPoly poly_lie_triple(const ReflectionData& rd, const LinearAuto& r, const MultiPoly& f,
                          const MultiPoly& g, const MultiPoly& h, BracketVariant variant) {
  MultiPoly skew =
      poly_alia_bracket(rd, r, f, g, variant) - poly_alia_bracket(rd, r, g, f, variant);
  Scalar half = Scalar(Rational(1, 2), r.field());
  return half * poly_alia_bracket(rd, r, skew, h, variant);
}

bool invariance_check(const MultiPoly& f, const std::vector<LinearAuto>& generators) {
  for (const auto& g : generators)
    if (!(apply_auto(g, f) == f)) return false;
  return true;
}

}  // namespace alia
