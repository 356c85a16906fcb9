#include "alia/bialgebra.hpp"

#include <string>
#include <utility>

#include "alia/error.hpp"

namespace alia {

namespace {

Vector flatten(const Matrix& m) {
  Vector v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
  return v;
}

void require_same(const AlgebraSC& a, const Comultiplication& delta, const char* what) {
  if (a.dim() != delta.dim())
    throw ShapeError(std::string(what) + ": algebra and comultiplication dimensions differ");
  if (!(a.field() == delta.field())) throw DomainError(std::string(what) + ": field mismatch");
}

}  // namespace

Comultiplication::Comultiplication(std::size_t dim, const FieldSpec& field)
    : dim_(dim), field_(field), data_(dim * dim * dim, Scalar::zero(field)) {}

void Comultiplication::set_coeff(std::size_t i, std::size_t j, std::size_t k,
                                 const Scalar& value) {
  if (i >= dim_ || j >= dim_ || k >= dim_) throw ShapeError("comultiplication index out of range");
  if (!(value.field() == field_)) throw DomainError("comultiplication coefficient field mismatch");
  data_[(i * dim_ + j) * dim_ + k] = value;
}

Matrix Comultiplication::apply(const Vector& x) const {
  if (x.size() != dim_) throw ShapeError("comultiplication argument has the wrong length");
  Matrix out(dim_, dim_, field_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k) out(j, k) += x[i] * coeff(i, j, k);
  }
  return out;
}

AlgebraSC dual_algebra_from_delta(const Comultiplication& delta) {
  const std::size_t n = delta.dim();
  AlgebraSC out(n, delta.field());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!delta.coeff(i, j, k).is_zero()) out.set_coeff(j, k, i, delta.coeff(i, j, k));
  return out;
}

Comultiplication delta_from_algebra(const AlgebraSC& a) {
  const std::size_t n = a.dim();
  Comultiplication out(n, a.field());
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        if (!a.coeff(j, k, i).is_zero()) out.set_coeff(i, j, k, a.coeff(j, k, i));
  return out;
}

CheckReport check_coalgebra(const Comultiplication& delta, std::size_t cap) {
  const std::size_t n = delta.dim();
  const FieldSpec& field = delta.field();
  CheckReport report("coalgebra", cap);
  const std::string id = "coalgebra";
  report.mark_checked(id);
  auto at = [n](std::size_t a, std::size_t b, std::size_t c) { return (a * n + b) * n + c; };

  for (std::size_t i = 0; i < n; ++i) {
    // T = (delta (x) id) delta(e_i)
    std::vector<Scalar> t(n * n * n, Scalar::zero(field));
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t c = 0; c < n; ++c) {
        const Scalar& outer = delta.coeff(i, p, c);
        if (outer.is_zero()) continue;
        for (std::size_t a = 0; a < n; ++a)
          for (std::size_t b = 0; b < n; ++b) t[at(a, b, c)] += outer * delta.coeff(p, a, b);
      }
    // U = (tau (x) id - id) T
    std::vector<Scalar> u(n * n * n, Scalar::zero(field));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c) u[at(a, b, c)] = t[at(b, a, c)] - t[at(a, b, c)];
    // xi moves the coefficient at (a, b, c) to (b, c, a).
    Vector residual;
    residual.reserve(n * n * n);
    bool nonzero = false;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c) {
          Scalar v = u[at(a, b, c)] + u[at(c, a, b)] + u[at(b, c, a)];
          nonzero = nonzero || !v.is_zero();
          residual.push_back(std::move(v));
        }
    if (nonzero) report.add(Violation{id, {i}, std::move(residual)});
  }

  bool dual_ok = check_alia(dual_algebra_from_delta(delta), Side::left, 1).passed();
  if (dual_ok != report.passed())
    throw ConsistencyError("check_coalgebra: composite and dual-algebra verdicts differ");
  return report;
}

CheckReport check_bialgebra(const AlgebraSC& a, const Comultiplication& delta, std::size_t cap) {
  require_same(a, delta, "check_bialgebra");
  CheckReport report("bialgebra", cap);
  report.merge(check_alia(a, Side::left, cap));
  report.merge(check_coalgebra(delta, cap));
  const std::string id = "bialgebra-compatibility";
  report.mark_checked(id);
  const std::size_t n = a.dim();
  const FieldSpec& field = a.field();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector x = basis_vector(n, i, field), y = basis_vector(n, j, field);
      Matrix t = delta.apply(a.product(i, j) - a.product(j, i));
      t += right_multiplication(a, i) * delta.apply(y);
      t -= right_multiplication(a, j) * delta.apply(x);
      Matrix u = t.transpose() - t;
      if (!u.is_zero()) report.add(Violation{id, {i, j}, flatten(u)});
    }
  return report;
}

BilinearForm canonical_pairing(std::size_t n, const FieldSpec& field) {
  Matrix g(2 * n, 2 * n, field);
  for (std::size_t i = 0; i < n; ++i) {
    g(i, n + i) = Scalar::one(field);
    g(n + i, i) = Scalar::one(field);
  }
  return BilinearForm(std::move(g));
}

ManinTripleData double_construct(const AlgebraSC& a, const Comultiplication& delta) {
  require_same(a, delta, "double_construct");
  if (!check_alia(a, Side::left, 1).passed())
    throw DomainError("double_construct: algebra is not left-Alia");
  if (!check_coalgebra(delta, 1).passed())
    throw DomainError("double_construct: comultiplication is not a left-Alia coalgebra");

  const std::size_t n = a.dim();
  const FieldSpec& field = a.field();
  AlgebraSC star = dual_algebra_from_delta(delta);
  AlgebraSC d(2 * n, field);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t t = 0; t < n; ++t) {
        if (!a.coeff(i, j, t).is_zero()) d.set_coeff(i, j, t, a.coeff(i, j, t));
        if (!star.coeff(i, j, t).is_zero()) d.set_coeff(n + i, n + j, n + t, star.coeff(i, j, t));
      }
  // Coefficients read off the pairing:
  //   <L*_A(x) b*, y> = -<b*, [x,y]>,
  //   <(L*_{A*} - R*_{A*})(b*) x, a*> = <x, [a*,b*] - [b*,a*]>.
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t y = 0; y < n; ++y) d.set_coeff(x, n + b, n + y, -a.coeff(x, y, b));
      for (std::size_t s = 0; s < n; ++s)
        d.set_coeff(x, n + b, s, star.coeff(s, b, x) - star.coeff(b, s, x));
    }
  //   [a*, y] = L*_{A*}(a*) y + (L*_A - R*_A)(y) a*
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t b = 0; b < n; ++b) d.set_coeff(n + s, y, b, -star.coeff(s, b, y));
      for (std::size_t x = 0; x < n; ++x)
        d.set_coeff(n + s, y, n + x, a.coeff(x, y, s) - a.coeff(y, x, s));
    }
  return ManinTripleData{std::move(d), n, canonical_pairing(n, field)};
}

CheckReport check_manin_triple(const ManinTripleData& mt, std::size_t cap) {
  const AlgebraSC& d = mt.double_algebra;
  const std::size_t n = mt.split;
  if (d.dim() != 2 * n) throw ShapeError("check_manin_triple: double must have dimension 2 * split");
  CheckReport report("manin-triple", cap);
  report.merge(check_alia(d, Side::left, cap));
  const std::string closed_a = "closure-A", closed_star = "closure-Astar";
  report.mark_checked(closed_a);
  report.mark_checked(closed_star);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector in_a = d.product(i, j);
      Vector leak_a(in_a.begin() + n, in_a.end());
      if (!is_zero(leak_a)) report.add(Violation{closed_a, {i, j}, std::move(leak_a)});
      Vector in_star = d.product(n + i, n + j);
      Vector leak_star(in_star.begin(), in_star.begin() + n);
      if (!is_zero(leak_star))
        report.add(Violation{closed_star, {n + i, n + j}, std::move(leak_star)});
    }
  report.merge(check_quadratic(d, mt.form, cap));
  return report;
}

MatchedPairData induced_matched_pair(const AlgebraSC& a, const Comultiplication& delta) {
  require_same(a, delta, "induced_matched_pair");
  AlgebraSC star = dual_algebra_from_delta(delta);
  auto families = [](const AlgebraSC& alg, std::vector<Matrix>& l, std::vector<Matrix>& r) {
    for (std::size_t i = 0; i < alg.dim(); ++i) {
      Matrix ls = -left_multiplication(alg, i).transpose();
      Matrix rs = -right_multiplication(alg, i).transpose();
      l.push_back(ls);
      r.push_back(ls - rs);
    }
  };
  std::vector<Matrix> la, ra, lb, rb;
  families(a, la, ra);
  families(star, lb, rb);
  return MatchedPairData(a, std::move(star), std::move(la), std::move(ra), std::move(lb),
                         std::move(rb));
}

AlgebraSC trivial_extension(const AlgebraSC& assoc) {
  const std::size_t n = assoc.dim();
  AlgebraSC out(2 * n, assoc.field());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t t = 0; t < n; ++t) {
        const Scalar& c = assoc.coeff(i, j, t);
        if (c.is_zero()) continue;
        out.set_coeff(i, j, t, out.coeff(i, j, t) + c);
        // e_i . e_t* has e_j* component <e_t*, e_i e_j>, and symmetrically.
        out.set_coeff(i, n + t, n + j, out.coeff(i, n + t, n + j) + c);
        out.set_coeff(n + t, i, n + j, out.coeff(n + t, i, n + j) + c);
      }
  return out;
}

ManinTripleData frobenius_double(const AlgebraSC& assoc_double, std::size_t split,
                                 const Matrix& p, const Matrix& q_star) {
  const std::size_t n = split;
  if (assoc_double.dim() != 2 * n)
    throw ShapeError("frobenius_double: product must have dimension 2 * split");
  if (p.rows() != n || p.cols() != n || q_star.rows() != n || q_star.cols() != n)
    throw ShapeError("frobenius_double: P and Q* must be split x split");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t t = 0; t < n; ++t) {
        if (!assoc_double.coeff(i, j, n + t).is_zero())
          throw DomainError("frobenius_double: A is not a subalgebra");
        if (!assoc_double.coeff(n + i, n + j, t).is_zero())
          throw DomainError("frobenius_double: A* is not a subalgebra");
      }
  BilinearForm form = canonical_pairing(n, assoc_double.field());
  FrobeniusBracket fb = quadratic_from_frobenius(assoc_double, form, direct_sum(p, q_star));
  return ManinTripleData{std::move(fb.bracket), n, std::move(form)};
}

}  // namespace alia
