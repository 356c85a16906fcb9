#include "alia/quadratic.hpp"

#include <utility>

#include "alia/error.hpp"

namespace alia {

namespace {

void require_dims(const AlgebraSC& a, std::size_t n, const char* what) {
  if (a.dim() != n)
    throw ShapeError(std::string(what) + ": algebra has dimension " + std::to_string(a.dim()) +
                     " but the form/tensor has dimension " + std::to_string(n));
}

Vector flatten(const Matrix& m) {
  Vector v;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
  return v;
}

}  // namespace

BilinearForm::BilinearForm(Matrix gram) : gram_(std::move(gram)) {
  if (!gram_.is_square()) throw ShapeError("Gram matrix must be square");
}

Scalar BilinearForm::operator()(const Vector& x, const Vector& y) const {
  return dot(x, gram_ * y);
}

Tensor2::Tensor2(Matrix entries) : entries_(std::move(entries)) {
  if (!entries_.is_square()) throw ShapeError("2-tensor coefficient matrix must be square");
}

Matrix flat_map(const BilinearForm& b) { return b.gram().transpose(); }

CheckReport check_quadratic(const AlgebraSC& a, const BilinearForm& b, std::size_t cap) {
  require_dims(a, b.dim(), "check_quadratic");
  CheckReport report("quadratic", cap);
  const std::string sym = "form-symmetric", nondeg = "form-nondegenerate",
                    quad = "quadratic-invariance", inv = "invariance-consequence";
  report.mark_checked(sym);
  report.mark_checked(nondeg);
  report.mark_checked(quad);
  report.mark_checked(inv);
  const std::size_t n = a.dim();
  const Matrix& g = b.gram();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!(g(i, j) == g(j, i))) report.add(Violation{sym, {i, j}, {g(i, j) - g(j, i)}});
  if (determinant(g).is_zero()) report.fail(nondeg);

  const FieldSpec& field = a.field();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vector x = basis_vector(n, i, field), y = basis_vector(n, j, field),
               z = basis_vector(n, k, field);
        Scalar lhs = b(a.product(i, j), z);
        Scalar rhs = b(x, a.product(k, j) - a.product(j, k));
        if (!(lhs == rhs)) report.add(Violation{quad, {i, j, k}, {lhs - rhs}});
        Scalar cons = lhs + b(y, a.product(i, k));
        if (!cons.is_zero()) report.add(Violation{inv, {i, j, k}, {cons}});
      }
  if (report.passed(sym) && report.passed(quad) && !report.passed(inv))
    throw ConsistencyError("check_quadratic: invariance holds but its consequence fails");
  return report;
}

CheckReport check_associative_invariance(const AlgebraSC& product, const BilinearForm& b,
                                         std::size_t cap) {
  require_dims(product, b.dim(), "check_associative_invariance");
  CheckReport report("associative-invariance", cap);
  const std::string id = "associative-invariance";
  report.mark_checked(id);
  const std::size_t n = product.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Scalar lhs = b(product.product(i, j), basis_vector(n, k, product.field()));
        Scalar rhs = b(basis_vector(n, i, product.field()), product.product(j, k));
        if (!(lhs == rhs)) report.add(Violation{id, {i, j, k}, {lhs - rhs}});
      }
  return report;
}

FrobeniusBracket quadratic_from_frobenius(const AlgebraSC& assoc, const BilinearForm& b,
                                          const Matrix& f) {
  const std::size_t n = assoc.dim();
  require_dims(assoc, b.dim(), "quadratic_from_frobenius");
  if (f.rows() != n || f.cols() != n) throw ShapeError("quadratic_from_frobenius: f has the wrong shape");
  if (!check_commutative(assoc).passed())
    throw DomainError("quadratic_from_frobenius: product is not commutative");
  if (!check_associative(assoc).passed())
    throw DomainError("quadratic_from_frobenius: product is not associative");
  if (!b.gram().is_symmetric()) throw DomainError("quadratic_from_frobenius: form is not symmetric");
  auto g_inv = inverse(b.gram());
  if (!g_inv) throw DomainError("quadratic_from_frobenius: form is degenerate");
  if (!check_associative_invariance(assoc, b).passed())
    throw DomainError("quadratic_from_frobenius: form is not invariant, B(xy,z) != B(x,yz)");

  Matrix f_hat = *g_inv * f.transpose() * b.gram();
  AlgebraSC bracket = special_left_alia(assoc, f, -f_hat);
  return {std::move(bracket), std::move(f_hat)};
}

CheckReport tensor_invariance(const AlgebraSC& a, const Tensor2& r, std::size_t cap) {
  require_dims(a, r.dim(), "tensor_invariance");
  CheckReport report("tensor-invariance", cap);
  const std::string id = "tensor-invariance";
  report.mark_checked(id);
  const Matrix& t = r.entries();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    Matrix R = right_multiplication(a, i);
    Matrix L = left_multiplication(a, i);
    // (M (x) id) r has coefficient matrix M t; (id (x) N) r has t N^T.
    Matrix h = (R - L) * t - t * R.transpose();
    if (!h.is_zero()) report.add(Violation{id, {i}, flatten(h)});
  }
  return report;
}

Tensor2 btilde(const BilinearForm& b) {
  auto inv = inverse(flat_map(b));
  if (!inv) throw DomainError("btilde: form is degenerate");
  // <B~, a* (x) b*> = <flat^{-1}(a*), b*>, i.e. entry (a, b) = inv(b, a).
  return Tensor2(inv->transpose());
}

}  // namespace alia
