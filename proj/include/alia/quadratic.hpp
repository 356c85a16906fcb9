#pragma once

#include "alia/algebra.hpp"

namespace alia {

/// Bilinear form B(e_i, e_j) = gram(i, j).
class BilinearForm {
 public:
  BilinearForm() = default;
  /// Throws ShapeError unless `gram` is square.
  explicit BilinearForm(Matrix gram);

  std::size_t dim() const { return gram_.rows(); }
  const FieldSpec& field() const { return gram_.field(); }
  const Matrix& gram() const { return gram_; }
  Scalar operator()(const Vector& x, const Vector& y) const;

 private:
  Matrix gram_;
};

/// r = sum r(i, j) e_i (x) e_j.
class Tensor2 {
 public:
  Tensor2() = default;
  explicit Tensor2(Matrix entries);

  std::size_t dim() const { return entries_.rows(); }
  const Matrix& entries() const { return entries_; }
  bool is_symmetric() const { return entries_.is_symmetric(); }

  friend bool operator==(const Tensor2& a, const Tensor2& b) { return a.entries_ == b.entries_; }

 private:
  Matrix entries_;
};

/// Matrix of the map x -> B(x, .) into the dual basis (the transpose of the Gram matrix).
Matrix flat_map(const BilinearForm& b);

/// Symmetry, exact nondegeneracy, B([x,y],z) = B(x,[z,y]-[y,z]) on basis
/// triples, and the consequence B([x,y],z) + B(y,[x,z]) = 0.
CheckReport check_quadratic(const AlgebraSC& a, const BilinearForm& b,
                            std::size_t cap = CheckReport::default_cap);

struct FrobeniusBracket {
  AlgebraSC bracket;
  /// Adjoint of f with respect to B: B(f_hat x, y) = B(x, f y).
  Matrix f_hat;
};

/// [x, y] = x . f(y) - f_hat(x . y) on a commutative associative algebra with
/// a symmetric nondegenerate invariant form. Throws DomainError naming the
/// first failed hypothesis.
FrobeniusBracket quadratic_from_frobenius(const AlgebraSC& assoc, const BilinearForm& b,
                                          const Matrix& f);

/// h(e_i) r = 0 for every i, where h(x) = (R - L)(x) (x) id - id (x) R(x).
CheckReport tensor_invariance(const AlgebraSC& a, const Tensor2& r,
                              std::size_t cap = CheckReport::default_cap);

/// The 2-tensor of the inverse of the flat map. Throws DomainError if B is singular.
Tensor2 btilde(const BilinearForm& b);

/// B(xy, z) = B(x, yz) for the given product, on basis triples.
CheckReport check_associative_invariance(const AlgebraSC& product, const BilinearForm& b,
                                         std::size_t cap = CheckReport::default_cap);

}  // namespace alia
