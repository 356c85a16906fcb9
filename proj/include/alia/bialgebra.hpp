#pragma once

#include <cstddef>
#include <vector>

#include "alia/algebra.hpp"
#include "alia/quadratic.hpp"
#include "alia/representation.hpp"

namespace alia {

/// delta(e_i) = sum_{j,k} D(i, j, k) e_j (x) e_k.
class Comultiplication {
 public:
  Comultiplication() = default;
  /// Zero comultiplication.
  Comultiplication(std::size_t dim, const FieldSpec& field);

  std::size_t dim() const { return dim_; }
  const FieldSpec& field() const { return field_; }
  const Scalar& coeff(std::size_t i, std::size_t j, std::size_t k) const {
    return data_[(i * dim_ + j) * dim_ + k];
  }
  void set_coeff(std::size_t i, std::size_t j, std::size_t k, const Scalar& value);

  /// Coefficient matrix of delta(x) as a 2-tensor.
  Matrix apply(const Vector& x) const;

  friend bool operator==(const Comultiplication& a, const Comultiplication& b) {
    return a.dim_ == b.dim_ && a.field_ == b.field_ && a.data_ == b.data_;
  }

 private:
  std::size_t dim_ = 0;
  FieldSpec field_;
  std::vector<Scalar> data_;
};

/// Structure constants of A*: [e_j*, e_k*] = sum_i D(i, j, k) e_i*.
AlgebraSC dual_algebra_from_delta(const Comultiplication& delta);

/// Inverse of dual_algebra_from_delta: the comultiplication whose dual algebra is `a`.
Comultiplication delta_from_algebra(const AlgebraSC& a);

/// (id + xi + xi^2)(tau (x) id - id)(delta (x) id) delta = 0 on every basis
/// element. Cross-checked against check_alia on the dual algebra; throws
/// ConsistencyError if the two verdicts differ.
CheckReport check_coalgebra(const Comultiplication& delta,
                            std::size_t cap = CheckReport::default_cap);

/// A left-Alia, delta a left-Alia coalgebra, and
/// (tau - id)(delta([x,y]-[y,x]) + (R(x) (x) id)delta(y) - (R(y) (x) id)delta(x)) = 0
/// on basis pairs.
CheckReport check_bialgebra(const AlgebraSC& a, const Comultiplication& delta,
                            std::size_t cap = CheckReport::default_cap);

/// A double A + A* with A on indices [0, split) and A* on [split, 2 split).
struct ManinTripleData {
  AlgebraSC double_algebra;
  std::size_t split = 0;
  BilinearForm form;
};

/// B_d(x + a*, y + b*) = <a*, y> + <x, b*> on 2n coordinates.
BilinearForm canonical_pairing(std::size_t n, const FieldSpec& field);

/// Bracket on A + A* built from the coadjoint actions of A and A* on each
/// other. Throws DomainError unless A is left-Alia and delta is a left-Alia
/// coalgebra. No validity claim for the result.
ManinTripleData double_construct(const AlgebraSC& a, const Comultiplication& delta);

/// Left-Alia, closure of both halves, and check_quadratic for the form.
CheckReport check_manin_triple(const ManinTripleData& mt,
                               std::size_t cap = CheckReport::default_cap);

/// lA = L*_A, rA = L*_A - R*_A, lB = L*_{A*}, rB = L*_{A*} - R*_{A*}.
MatchedPairData induced_matched_pair(const AlgebraSC& a, const Comultiplication& delta);

/// Product on A + A* with x . b* given by <x . b*, y> = <b*, x y> and A* an
/// ideal with zero product. For commutative associative A this is a
/// commutative associative algebra with B_d invariant.
AlgebraSC trivial_extension(const AlgebraSC& assoc);

/// [u, v] = u . f(v) - f_hat(u . v) with f = diag(P, Qstar) on A + A*. The
/// input product must be commutative and associative, contain both halves as
/// subalgebras and leave B_d invariant; DomainError otherwise.
ManinTripleData frobenius_double(const AlgebraSC& assoc_double, std::size_t split,
                                 const Matrix& p, const Matrix& q_star);

}  // namespace alia
