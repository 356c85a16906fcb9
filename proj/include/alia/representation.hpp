#pragma once

#include <cstddef>
#include <vector>

#include "alia/algebra.hpp"

namespace alia {

/// A pair of linear maps l, r : A -> End(V), stored as the matrices of
/// l(e_i) and r(e_i) on V = K^module_dim.
class Representation {
 public:
  Representation() = default;
  /// Throws ShapeError unless both families have algebra.dim() square
  /// matrices of size module_dim.
  Representation(AlgebraSC algebra, std::size_t module_dim, std::vector<Matrix> l,
                 std::vector<Matrix> r);

  const AlgebraSC& algebra() const { return algebra_; }
  std::size_t module_dim() const { return module_dim_; }
  const std::vector<Matrix>& l() const { return l_; }
  const std::vector<Matrix>& r() const { return r_; }

  /// Linear extensions l(x) = sum x_i l(e_i), r(x) = sum x_i r(e_i).
  Matrix l_of(const Vector& x) const;
  Matrix r_of(const Vector& x) const;

  /// Zero maps on a module of the given dimension.
  static Representation zero(const AlgebraSC& algebra, std::size_t module_dim);

 private:
  AlgebraSC algebra_;
  std::size_t module_dim_ = 0;
  std::vector<Matrix> l_;
  std::vector<Matrix> r_;
};

/// For every basis pair (i, j):
///   l([e_i,e_j]) - l([e_j,e_i]) = r_i r_j - r_j r_i + r_j l_i - r_i l_j.
/// Side::right checks (r, l) as a representation of the opposite algebra,
/// which is what a representation of a right-Alia algebra amounts to.
CheckReport check_representation(const Representation& rep, Side side = Side::left,
                                 std::size_t cap = CheckReport::default_cap);

/// (L, R, A). Throws DomainError if the algebra is not left-Alia.
Representation adjoint_rep(const AlgebraSC& a);

/// Side::left: (l*, l* - r*) with l*(x) = -l(x)^T.
/// Side::right: (r* - l*, r*) for representations of right-Alia algebras.
/// Throws DomainError if `rep` fails check_representation for that side.
Representation dual_rep(const Representation& rep, Side side = Side::left);

/// A + V with [x+u, y+v] = [x,y] + l(x)v + r(y)u; A occupies the first
/// dim(A) coordinates.
AlgebraSC semidirect_product(const AlgebraSC& a, const Representation& rep);

/// phi invertible and phi l_i = l'_i phi, phi r_i = r'_i phi for all i.
CheckReport check_equivalence(const Representation& rep, const Representation& rep2,
                              const Matrix& phi, std::size_t cap = CheckReport::default_cap);

/// Two algebras acting on each other: lA, rA are indexed by A's basis and act
/// on B; lB, rB are indexed by B's basis and act on A.
class MatchedPairData {
 public:
  MatchedPairData() = default;
  MatchedPairData(AlgebraSC a, AlgebraSC b, std::vector<Matrix> l_a, std::vector<Matrix> r_a,
                  std::vector<Matrix> l_b, std::vector<Matrix> r_b);

  const AlgebraSC& a() const { return a_; }
  const AlgebraSC& b() const { return b_; }
  /// (lA, rA, B) as a representation of A.
  Representation a_on_b() const { return Representation(a_, b_.dim(), l_a_, r_a_); }
  /// (lB, rB, A) as a representation of B.
  Representation b_on_a() const { return Representation(b_, a_.dim(), l_b_, r_b_); }

  /// Roles of A and B exchanged.
  MatchedPairData swapped() const;

 private:
  AlgebraSC a_;
  AlgebraSC b_;
  std::vector<Matrix> l_a_, r_a_, l_b_, r_b_;
};

/// Both algebras left-Alia, both actions representations, and the two
/// compatibility conditions on basis tuples (x, y, a) and (x, a, b).
CheckReport check_matched_pair(const MatchedPairData& mp,
                               std::size_t cap = CheckReport::default_cap);

/// [x+a, y+b] = [x,y]_A + lB(a)y + rB(b)x + [a,b]_B + lA(x)b + rA(y)a on A + B.
AlgebraSC matched_pair_sum(const MatchedPairData& mp);

}  // namespace alia
