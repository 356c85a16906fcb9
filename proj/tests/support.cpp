#include "support.hpp"

#include <stdexcept>

namespace alia::test {

AlgebraSC algebra_from_table(std::size_t n, const Table& table, const FieldSpec& field) {
  AlgebraSC a(n, field);
  for (const auto& [ij, coeffs] : table)
    for (const auto& [t, c] : coeffs) a.set_coeff(ij.first, ij.second, t, c.embed(field));
  return a;
}

AlgebraSC golden_algebra() {
  std::map<std::size_t, Scalar> all{{0, q(1)}, {1, q(1)}, {2, q(1)}};
  Table t{{{0, 0}, all},         {{0, 1}, {{0, q(1)}}}, {{0, 2}, {{0, q(1)}}},
          {{1, 0}, {{1, q(1)}}}, {{1, 1}, all},         {{1, 2}, all},
          {{2, 0}, {{2, q(1)}}}, {{2, 1}, all},         {{2, 2}, all}};
  return algebra_from_table(3, t);
}

AlgebraSC failing_fixture() {
  return algebra_from_table(3, {{{0, 0}, {{0, q(1)}}}, {{1, 2}, {{0, q(1)}}}});
}

Comultiplication golden_delta() {
  Comultiplication d(3, FieldSpec::rational());
  d.set_coeff(0, 0, 0, q(1));
  return d;
}

Comultiplication delta_e2() {
  Comultiplication d(3, FieldSpec::rational());
  d.set_coeff(1, 0, 1, q(1));
  return d;
}

AlgebraSC truncated_polynomial(std::size_t k) {
  AlgebraSC a(k, FieldSpec::rational());
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; i + j < k; ++j) a.set_coeff(i, j, i + j, q(1));
  return a;
}

LinearAuto swap_reflection() { return LinearAuto(matrix_of({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}})); }

Matrix matrix_of(const std::vector<std::vector<long>>& rows) {
  std::vector<Vector> rs;
  for (const auto& r : rows) {
    Vector v;
    for (long x : r) v.push_back(q(x));
    rs.push_back(v);
  }
  return Matrix::from_rows(rs, FieldSpec::rational());
}

Scalar Gen::rational(long lo, long hi) {
  long p = integer(lo, hi);
  long d = integer(1, std::max(1L, hi));
  return q(p, d);
}

AlgebraSC Gen::algebra(std::size_t n, long lo, long hi) {
  AlgebraSC a(n, FieldSpec::rational());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t t = 0; t < n; ++t) a.set_coeff(i, j, t, rational(lo, hi));
  return a;
}

AlgebraSC Gen::sparse_algebra(std::size_t n, double density) {
  AlgebraSC a(n, FieldSpec::rational());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t t = 0; t < n; ++t)
        if (coin(density)) a.set_coeff(i, j, t, q(integer(-2, 2)));
  return a;
}

Comultiplication Gen::sparse_delta(std::size_t n, double density) {
  Comultiplication d(n, FieldSpec::rational());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (coin(density)) d.set_coeff(i, j, k, q(integer(-2, 2)));
  return d;
}

Matrix Gen::matrix(std::size_t rows, std::size_t cols, long lo, long hi) {
  Matrix m(rows, cols, FieldSpec::rational());
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rational(lo, hi);
  return m;
}

MultiPoly Gen::monomial(std::size_t nvars, unsigned max_degree, bool unit_coeff) {
  unsigned degree = static_cast<unsigned>(integer(0, max_degree));
  Exponents e(nvars, 0);
  for (unsigned k = 0; k < degree; ++k) ++e[static_cast<std::size_t>(integer(0, nvars - 1))];
  Scalar c = unit_coeff ? q(1) : rational(-9, 9);
  if (c.is_zero()) c = q(1);
  return MultiPoly::monomial(e, c);
}

MultiPoly Gen::polynomial(std::size_t nvars, unsigned max_degree, std::size_t terms) {
  MultiPoly p(nvars, FieldSpec::rational());
  for (std::size_t k = 0; k < terms; ++k) p += monomial(nvars, max_degree);
  return p;
}

std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> oracle_alia_failures(
    const AlgebraSC& a) {
  const std::size_t n = a.dim();
  using Vec = std::vector<mpq_class>;
  std::vector<mpq_class> c(n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t t = 0; t < n; ++t) c[(i * n + j) * n + t] = a.coeff(i, j, t).rational_value();
  auto br = [&](const Vec& x, const Vec& y) {
    Vec out(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (y[j] == 0) continue;
        mpq_class s = x[i] * y[j];
        for (std::size_t t = 0; t < n; ++t) out[t] += s * c[(i * n + j) * n + t];
      }
    }
    return out;
  };
  auto e = [&](std::size_t i) {
    Vec v(n);
    v[i] = 1;
    return v;
  };
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> bad;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vec x = e(i), y = e(j), z = e(k);
        Vec lhs1 = br(br(x, y), z), lhs2 = br(br(y, z), x), lhs3 = br(br(z, x), y);
        Vec rhs1 = br(br(y, x), z), rhs2 = br(br(z, y), x), rhs3 = br(br(x, z), y);
        for (std::size_t t = 0; t < n; ++t)
          if (lhs1[t] + lhs2[t] + lhs3[t] != rhs1[t] + rhs2[t] + rhs3[t]) {
            bad.emplace_back(i, j, k);
            break;
          }
      }
  return bad;
}

bool oracle_is_representation(const Representation& rep) {
  const AlgebraSC& a = rep.algebra();
  const std::size_t n = a.dim(), m = rep.module_dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t v = 0; v < m; ++v) {
        Vector ev = basis_vector(m, v, a.field());
        const Matrix &li = rep.l()[i], &lj = rep.l()[j], &ri = rep.r()[i], &rj = rep.r()[j];
        Vector lhs = rep.l_of(a.product(i, j) - a.product(j, i)) * ev;
        Vector rhs = ri * (rj * ev) - rj * (ri * ev) + rj * (li * ev) - ri * (lj * ev);
        if (!(lhs == rhs)) return false;
      }
  return true;
}

MultiPoly oracle_twisted_derivation(const ReflectionData& rd, const LinearAuto& r,
                                    const MultiPoly& f) {
  const std::size_t n = f.nvars();
  MultiPoly out(n, f.field());
  for (const auto& [e, c] : f.terms()) {
    // Build the monomial one variable at a time, carrying D and R of the prefix.
    MultiPoly prefix = MultiPoly::constant(n, Scalar::one(f.field()));
    MultiPoly d_prefix(n, f.field());
    for (std::size_t i = 0; i < n; ++i)
      for (std::uint32_t k = 0; k < e[i]; ++k) {
        MultiPoly xi = MultiPoly::variable(n, i, f.field());
        MultiPoly dxi = MultiPoly::constant(n, rd.delta_r[i]);
        d_prefix = d_prefix * xi + apply_auto(r, prefix) * dxi;
        prefix = prefix * xi;
      }
    out += c * d_prefix;
  }
  return out;
}

Scalar oracle_pairing_delta(const Comultiplication& delta, const Vector& a_star,
                            const Vector& b_star, const Vector& x) {
  const std::size_t n = delta.dim();
  Scalar s = Scalar::zero(delta.field());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) s += x[i] * delta.coeff(i, j, k) * a_star[j] * b_star[k];
  return s;
}

std::vector<std::pair<std::size_t, std::size_t>> oracle_bialgebra_failures(
    const AlgebraSC& a, const Comultiplication& delta) {
  const std::size_t n = a.dim();
  std::vector<std::pair<std::size_t, std::size_t>> bad;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      // t(p, b): coefficient of e_p (x) e_b.
      std::vector<mpq_class> t(n * n);
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t b = 0; b < n; ++b) {
          mpq_class s = 0;
          for (std::size_t u = 0; u < n; ++u)
            s += (a.coeff(i, j, u).rational_value() - a.coeff(j, i, u).rational_value()) *
                 delta.coeff(u, p, b).rational_value();
          // (R(e_i) (x) id) delta(e_j): e_q (x) e_b -> [e_q, e_i] (x) e_b.
          for (std::size_t qv = 0; qv < n; ++qv) {
            s += a.coeff(qv, i, p).rational_value() * delta.coeff(j, qv, b).rational_value();
            s -= a.coeff(qv, j, p).rational_value() * delta.coeff(i, qv, b).rational_value();
          }
          t[p * n + b] = s;
        }
      bool ok = true;
      for (std::size_t p = 0; p < n && ok; ++p)
        for (std::size_t b = 0; b < n && ok; ++b) ok = t[b * n + p] == t[p * n + b];
      if (!ok) bad.emplace_back(i, j);
    }
  return bad;
}

AlgebraSC change_basis(const AlgebraSC& a, const Matrix& p) {
  auto p_inv = inverse(p);
  if (!p_inv) throw std::invalid_argument("change_basis: singular matrix");
  const std::size_t n = a.dim();
  AlgebraSC out(n, a.field());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.set_product(i, j, *p_inv * bracket(a, p.column(i), p.column(j)));
  return out;
}

AlgebraSC random_left_alia(Gen& gen, std::size_t index) {
  if (index % 2 == 0) return gen.algebra(2);
  Matrix p = gen.matrix(3, 3, -3, 3);
  while (determinant(p).is_zero()) p = gen.matrix(3, 3, -3, 3);
  return change_basis(golden_algebra(), p);
}

}  // namespace alia::test
