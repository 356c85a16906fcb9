#include "alia/representation.hpp"

#include <string>
#include <utility>

#include "alia/error.hpp"

namespace alia {

namespace {

void require_family(const std::vector<Matrix>& family, std::size_t count, std::size_t size,
                    const FieldSpec& field, const char* what) {
  if (family.size() != count)
    throw ShapeError(std::string(what) + ": expected " + std::to_string(count) +
                     " matrices, got " + std::to_string(family.size()));
  for (const auto& m : family) {
    if (m.rows() != size || m.cols() != size)
      throw ShapeError(std::string(what) + ": matrices must be " + std::to_string(size) + "x" +
                       std::to_string(size));
    if (!(m.field() == field)) throw DomainError(std::string(what) + ": field mismatch");
  }
}

Matrix combine(const std::vector<Matrix>& family, const Vector& x, std::size_t size,
               const FieldSpec& field) {
  if (x.size() != family.size()) throw ShapeError("coefficient vector has the wrong length");
  Matrix out(size, size, field);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) out += x[i] * family[i];
  return out;
}

Vector flatten(const Matrix& m) {
  Vector v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
  return v;
}

// -M^T, the dual action on V*.
Matrix dual_action(const Matrix& m) { return -m.transpose(); }

std::vector<Matrix> transpose_family(const std::vector<Matrix>& family) {
  std::vector<Matrix> out;
  out.reserve(family.size());
  for (const auto& m : family) out.push_back(dual_action(m));
  return out;
}

// Compatibility condition on basis tuples (x, y) of A and a of B:
//   rB(a)([x,y]-[y,x]) = [(lB-rB)(a)y, x] + [(rB-lB)(a)x, y]
//                        + lB((rA-lA)(y)a)x + lB((lA-rA)(x)a)y
void check_compatibility(const Representation& a_on_b, const Representation& b_on_a,
                         const std::string& identity, bool swap_indices, CheckReport& report) {
  const AlgebraSC& A = a_on_b.algebra();
  const std::size_t n = A.dim();
  const std::size_t m = a_on_b.module_dim();
  const FieldSpec& field = A.field();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t a = 0; a < m; ++a) {
        Vector ex = basis_vector(n, x, field), ey = basis_vector(n, y, field);
        Vector ea = basis_vector(m, a, field);
        const Matrix& lB = b_on_a.l()[a];
        const Matrix& rB = b_on_a.r()[a];
        const Matrix& lAx = a_on_b.l()[x];
        const Matrix& rAx = a_on_b.r()[x];
        const Matrix& lAy = a_on_b.l()[y];
        const Matrix& rAy = a_on_b.r()[y];

        Vector lhs = rB * (A.product(x, y) - A.product(y, x));
        Vector rhs = bracket(A, (lB - rB) * ey, ex) + bracket(A, (rB - lB) * ex, ey) +
                     b_on_a.l_of((rAy - lAy) * ea) * ex + b_on_a.l_of((lAx - rAx) * ea) * ey;
        Vector residual = lhs - rhs;
        if (is_zero(residual)) continue;
        std::vector<std::size_t> idx =
            swap_indices ? std::vector<std::size_t>{a, x, y} : std::vector<std::size_t>{x, y, a};
        report.add(Violation{identity, std::move(idx), std::move(residual)});
      }
}

void rename_into(CheckReport& target, const CheckReport& source, const std::string& identity) {
  target.mark_checked(identity);
  for (const auto& v : source.violations()) target.add(Violation{identity, v.indices, v.residual});
  // Uncapped count for the remainder.
  for (std::size_t k = source.violations().size(); k < source.violation_count(); ++k)
    target.fail(identity);
}

}  // namespace

Representation::Representation(AlgebraSC algebra, std::size_t module_dim, std::vector<Matrix> l,
                               std::vector<Matrix> r)
    : algebra_(std::move(algebra)), module_dim_(module_dim), l_(std::move(l)), r_(std::move(r)) {
  require_family(l_, algebra_.dim(), module_dim_, algebra_.field(), "representation l");
  require_family(r_, algebra_.dim(), module_dim_, algebra_.field(), "representation r");
}

Matrix Representation::l_of(const Vector& x) const {
  return combine(l_, x, module_dim_, algebra_.field());
}

Matrix Representation::r_of(const Vector& x) const {
  return combine(r_, x, module_dim_, algebra_.field());
}

Representation Representation::zero(const AlgebraSC& algebra, std::size_t module_dim) {
  std::vector<Matrix> z(algebra.dim(), Matrix(module_dim, module_dim, algebra.field()));
  return Representation(algebra, module_dim, z, z);
}

CheckReport check_representation(const Representation& rep, Side side, std::size_t cap) {
  if (side == Side::right) {
    Representation flipped(opposite(rep.algebra()), rep.module_dim(), rep.r(), rep.l());
    CheckReport inner = check_representation(flipped, Side::left, cap);
    CheckReport report("representation-right", cap);
    rename_into(report, inner, "representation-right");
    return report;
  }
  CheckReport report("representation", cap);
  const std::string id = "representation";
  report.mark_checked(id);
  const AlgebraSC& A = rep.algebra();
  const auto& l = rep.l();
  const auto& r = rep.r();
  for (std::size_t i = 0; i < A.dim(); ++i)
    for (std::size_t j = 0; j < A.dim(); ++j) {
      Matrix lhs = rep.l_of(A.product(i, j) - A.product(j, i));
      Matrix rhs = r[i] * r[j] - r[j] * r[i] + r[j] * l[i] - r[i] * l[j];
      Matrix residual = lhs - rhs;
      if (!residual.is_zero()) report.add(Violation{id, {i, j}, flatten(residual)});
    }
  return report;
}

Representation adjoint_rep(const AlgebraSC& a) {
  if (!check_alia(a).passed()) throw DomainError("adjoint_rep: algebra is not left-Alia");
  std::vector<Matrix> l, r;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    l.push_back(left_multiplication(a, i));
    r.push_back(right_multiplication(a, i));
  }
  return Representation(a, a.dim(), std::move(l), std::move(r));
}

Representation dual_rep(const Representation& rep, Side side) {
  if (side == Side::right) {
    Representation flipped(opposite(rep.algebra()), rep.module_dim(), rep.r(), rep.l());
    if (!check_representation(flipped).passed())
      throw DomainError("dual_rep: input is not a representation of the right-Alia algebra");
    Representation d = dual_rep(flipped, Side::left);
    return Representation(rep.algebra(), rep.module_dim(), d.r(), d.l());
  }
  if (!check_representation(rep).passed())
    throw DomainError("dual_rep: input is not a representation");
  std::vector<Matrix> l_star = transpose_family(rep.l());
  std::vector<Matrix> r_star = transpose_family(rep.r());
  std::vector<Matrix> second;
  second.reserve(l_star.size());
  for (std::size_t i = 0; i < l_star.size(); ++i) second.push_back(l_star[i] - r_star[i]);
  return Representation(rep.algebra(), rep.module_dim(), std::move(l_star), std::move(second));
}

AlgebraSC semidirect_product(const AlgebraSC& a, const Representation& rep) {
  if (!(rep.algebra() == a))
    throw ShapeError("semidirect_product: representation belongs to a different algebra");
  const std::size_t n = a.dim();
  MatchedPairData mp(a, AlgebraSC(rep.module_dim(), a.field()), rep.l(), rep.r(),
                     std::vector<Matrix>(rep.module_dim(), Matrix(n, n, a.field())),
                     std::vector<Matrix>(rep.module_dim(), Matrix(n, n, a.field())));
  return matched_pair_sum(mp);
}

CheckReport check_equivalence(const Representation& rep, const Representation& rep2,
                              const Matrix& phi, std::size_t cap) {
  const std::size_t m = rep.module_dim();
  if (rep2.module_dim() != m || phi.rows() != m || phi.cols() != m)
    throw ShapeError("check_equivalence: module dimensions and phi must agree");
  if (rep.algebra().dim() != rep2.algebra().dim())
    throw ShapeError("check_equivalence: representations of algebras of different dimension");
  CheckReport report("equivalence", cap);
  report.mark_checked("phi-invertible");
  report.mark_checked("intertwines-l");
  report.mark_checked("intertwines-r");
  if (determinant(phi).is_zero()) report.fail("phi-invertible");
  for (std::size_t i = 0; i < rep.algebra().dim(); ++i) {
    Matrix dl = phi * rep.l()[i] - rep2.l()[i] * phi;
    if (!dl.is_zero()) report.add(Violation{"intertwines-l", {i}, flatten(dl)});
    Matrix dr = phi * rep.r()[i] - rep2.r()[i] * phi;
    if (!dr.is_zero()) report.add(Violation{"intertwines-r", {i}, flatten(dr)});
  }
  return report;
}

MatchedPairData::MatchedPairData(AlgebraSC a, AlgebraSC b, std::vector<Matrix> l_a,
                                 std::vector<Matrix> r_a, std::vector<Matrix> l_b,
                                 std::vector<Matrix> r_b)
    : a_(std::move(a)),
      b_(std::move(b)),
      l_a_(std::move(l_a)),
      r_a_(std::move(r_a)),
      l_b_(std::move(l_b)),
      r_b_(std::move(r_b)) {
  if (!(a_.field() == b_.field())) throw DomainError("matched pair: algebras over different fields");
  require_family(l_a_, a_.dim(), b_.dim(), a_.field(), "matched pair lA");
  require_family(r_a_, a_.dim(), b_.dim(), a_.field(), "matched pair rA");
  require_family(l_b_, b_.dim(), a_.dim(), a_.field(), "matched pair lB");
  require_family(r_b_, b_.dim(), a_.dim(), a_.field(), "matched pair rB");
}

MatchedPairData MatchedPairData::swapped() const {
  return MatchedPairData(b_, a_, l_b_, r_b_, l_a_, r_a_);
}

CheckReport check_matched_pair(const MatchedPairData& mp, std::size_t cap) {
  CheckReport report("matched-pair", cap);
  rename_into(report, check_alia(mp.a(), Side::left, cap), "alia-A");
  rename_into(report, check_alia(mp.b(), Side::left, cap), "alia-B");
  rename_into(report, check_representation(mp.a_on_b(), Side::left, cap), "representation-A-on-B");
  rename_into(report, check_representation(mp.b_on_a(), Side::left, cap), "representation-B-on-A");
  report.mark_checked("matched-pair-1");
  report.mark_checked("matched-pair-2");
  check_compatibility(mp.a_on_b(), mp.b_on_a(), "matched-pair-1", false, report);
  check_compatibility(mp.b_on_a(), mp.a_on_b(), "matched-pair-2", true, report);
  return report;
}

AlgebraSC matched_pair_sum(const MatchedPairData& mp) {
  const AlgebraSC& A = mp.a();
  const AlgebraSC& B = mp.b();
  const std::size_t n = A.dim(), m = B.dim();
  const Representation ab = mp.a_on_b(), ba = mp.b_on_a();
  AlgebraSC out(n + m, A.field());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t t = 0; t < n; ++t) out.set_coeff(i, j, t, A.coeff(i, j, t));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t t = 0; t < m; ++t) out.set_coeff(n + a, n + b, n + t, B.coeff(a, b, t));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t b = 0; b < m; ++b) {
      // [x, b] = rB(b)x + lA(x)b
      for (std::size_t t = 0; t < n; ++t) out.set_coeff(i, n + b, t, ba.r()[b](t, i));
      for (std::size_t t = 0; t < m; ++t) out.set_coeff(i, n + b, n + t, ab.l()[i](t, b));
    }
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t j = 0; j < n; ++j) {
      // [a, y] = lB(a)y + rA(y)a
      for (std::size_t t = 0; t < n; ++t) out.set_coeff(n + a, j, t, ba.l()[a](t, j));
      for (std::size_t t = 0; t < m; ++t) out.set_coeff(n + a, j, n + t, ab.r()[j](t, a));
    }
  return out;
}

}  // namespace alia
