#pragma once

#include <cstddef>
#include <vector>

#include "alia/check_report.hpp"
#include "alia/matrix.hpp"

namespace alia {

/// Finite-dimensional algebra given by structure constants:
/// [e_i, e_j] = sum_t C(i, j, t) e_t, stored densely.
class AlgebraSC {
 public:
  AlgebraSC() = default;
  /// Zero bracket on `dim` dimensions.
  AlgebraSC(std::size_t dim, const FieldSpec& field);

  std::size_t dim() const { return dim_; }
  const FieldSpec& field() const { return field_; }

  const Scalar& coeff(std::size_t i, std::size_t j, std::size_t t) const {
    return data_[(i * dim_ + j) * dim_ + t];
  }
  void set_coeff(std::size_t i, std::size_t j, std::size_t t, const Scalar& value);

  /// [e_i, e_j] as a coordinate vector.
  Vector product(std::size_t i, std::size_t j) const;
  void set_product(std::size_t i, std::size_t j, const Vector& value);

  friend bool operator==(const AlgebraSC& a, const AlgebraSC& b) {
    return a.dim_ == b.dim_ && a.field_ == b.field_ && a.data_ == b.data_;
  }

 private:
  std::size_t dim_ = 0;
  FieldSpec field_;
  std::vector<Scalar> data_;
};

/// Bilinear extension of the structure constants.
Vector bracket(const AlgebraSC& a, const Vector& x, const Vector& y);

/// [x, y]_op = [y, x].
AlgebraSC opposite(const AlgebraSC& a);

/// Matrices of L(x) y = [x, y] and R(x) y = [y, x].
Matrix left_multiplication(const AlgebraSC& a, const Vector& x);
Matrix right_multiplication(const AlgebraSC& a, const Vector& x);
Matrix left_multiplication(const AlgebraSC& a, std::size_t i);
Matrix right_multiplication(const AlgebraSC& a, std::size_t i);

enum class Side { left, right };

/// Symmetric Jacobi identity on every basis triple. Runs both the direct
/// expansion and the structure-constant contraction and throws
/// ConsistencyError if their verdicts differ. For Side::right the identity
/// is evaluated on the opposite algebra and cross-checked against the
/// right-handed form evaluated on `a` itself.
CheckReport check_alia(const AlgebraSC& a, Side side = Side::left,
                       std::size_t cap = CheckReport::default_cap);

/// [[x,y],z]+[[y,z],x]+[[z,x],y] - [[y,x],z]-[[z,y],x]-[[x,z],y] on basis triples.
CheckReport check_alia_direct(const AlgebraSC& a, std::size_t cap = CheckReport::default_cap);

/// sum_k (C_ij^k - C_ji^k) C_kl^m + (C_jl^k - C_lj^k) C_ki^m + (C_li^k - C_il^k) C_kj^m
/// for every (i, j, l) and every output coordinate m.
CheckReport check_alia_structural(const AlgebraSC& a,
                                  std::size_t cap = CheckReport::default_cap);

/// x[y,z] form of the right-handed identity, evaluated on `a` directly.
CheckReport check_right_alia_direct(const AlgebraSC& a,
                                    std::size_t cap = CheckReport::default_cap);

CheckReport check_jacobi(const AlgebraSC& a, std::size_t cap = CheckReport::default_cap);
CheckReport check_commutative(const AlgebraSC& a, std::size_t cap = CheckReport::default_cap);
CheckReport check_associative(const AlgebraSC& a, std::size_t cap = CheckReport::default_cap);

/// Both anti-pre-Lie identities, with the bracket itself as the product:
///   x(yz) - y(xz) = [y,x]z   and   [x,y]z + [y,z]x + [z,x]y = 0,
/// where [x,y] = xy - yx.
CheckReport check_anti_pre_lie(const AlgebraSC& a, std::size_t cap = CheckReport::default_cap);

/// [x,[y,z]] - [y,[x,z]] = [[y,x],z] - [[x,y],z], the extra condition that makes
/// a left-Alia algebra anti-pre-Lie.
CheckReport check_anti_pre_lie_condition(const AlgebraSC& a,
                                         std::size_t cap = CheckReport::default_cap);

struct AlgebraFlags {
  bool is_left_alia = false;
  bool is_right_alia = false;
  bool is_skew = false;
  bool is_symmetric = false;
  bool is_lie = false;
  bool is_anti_pre_lie = false;
};

/// Throws ConsistencyError if the two anti-pre-Lie characterisations disagree
/// on a left-Alia input.
AlgebraFlags classify(const AlgebraSC& a);

/// [x, y] = x . f(y) + g(x . y) on a commutative associative algebra.
/// Throws DomainError if `assoc` is not commutative and associative.
AlgebraSC special_left_alia(const AlgebraSC& assoc, const Matrix& f, const Matrix& g);

/// Trilinear map [e_i, e_j, e_k] = sum_t T(i, j, k, t) e_t.
class TrilinearSC {
 public:
  TrilinearSC() = default;
  TrilinearSC(std::size_t dim, const FieldSpec& field);

  std::size_t dim() const { return dim_; }
  const FieldSpec& field() const { return field_; }
  const Scalar& coeff(std::size_t i, std::size_t j, std::size_t k, std::size_t t) const {
    return data_[((i * dim_ + j) * dim_ + k) * dim_ + t];
  }
  void set_coeff(std::size_t i, std::size_t j, std::size_t k, std::size_t t,
                 const Scalar& value);
  Vector product(std::size_t i, std::size_t j, std::size_t k) const;
  bool is_zero() const;

  friend bool operator==(const TrilinearSC& a, const TrilinearSC& b) {
    return a.dim_ == b.dim_ && a.field_ == b.field_ && a.data_ == b.data_;
  }

 private:
  std::size_t dim_ = 0;
  FieldSpec field_;
  std::vector<Scalar> data_;
};

Vector trilinear(const TrilinearSC& t, const Vector& x, const Vector& y, const Vector& z);

/// Alternation, cyclic identity and the five-argument fundamental identity.
CheckReport check_lie_triple(const TrilinearSC& t, std::size_t cap = CheckReport::default_cap);

enum class TripleVariant {
  alia,          // [x,y,z] = [[x,y]-[y,x], z]
  half_bracket,  // [x,y,z] = 1/2 [[x,y]-[y,x], z]
};

struct LieTripleResult {
  TrilinearSC triple;
  CheckReport report;
};

/// Throws DomainError if `a` is not left-Alia.
LieTripleResult lie_triple_from_alia(const AlgebraSC& a, TripleVariant variant,
                                     std::size_t cap = CheckReport::default_cap);

}  // namespace alia
