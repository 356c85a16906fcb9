#pragma once

// Fixtures, random generators and independent oracles shared by the test
// binaries. Oracles here deliberately avoid the library's check routines.

#include <cstddef>
#include <map>
#include <random>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "alia/algebra.hpp"
#include "alia/bialgebra.hpp"
#include "alia/poly.hpp"
#include "alia/quadratic.hpp"
#include "alia/reflection.hpp"
#include "alia/representation.hpp"

namespace alia::test {

inline Scalar q(long p, long d = 1) { return Scalar(Rational(p, d)); }

/// Entries ((i, j), {t: c}) with 0-based indices.
using Table = std::map<std::pair<std::size_t, std::size_t>, std::map<std::size_t, Scalar>>;

AlgebraSC algebra_from_table(std::size_t n, const Table& table,
                             const FieldSpec& field = FieldSpec::rational());

/// The three-dimensional left-Alia algebra of the golden example.
AlgebraSC golden_algebra();
/// [e1,e1] = e1, [e2,e3] = e1: the first 0/1 tensor that breaks symmetric Jacobi.
AlgebraSC failing_fixture();
/// delta(e1) = e1 (x) e1.
Comultiplication golden_delta();
/// delta(e2) = e1 (x) e2; not compatible with golden_algebra.
Comultiplication delta_e2();
/// K[t]/(t^k) with basis 1, t, ..., t^{k-1}.
AlgebraSC truncated_polynomial(std::size_t k);
/// R swapping x1 and x2 on three variables.
LinearAuto swap_reflection();
Matrix matrix_of(const std::vector<std::vector<long>>& rows);

/// Hand-rolled generators on a fixed-seed engine.
class Gen {
 public:
  explicit Gen(std::uint32_t seed) : rng_(seed) {}
  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }
  /// p/q with p in [lo, hi] and q in [1, hi].
  Scalar rational(long lo = -9, long hi = 9);
  /// Dense random structure constants.
  AlgebraSC algebra(std::size_t n, long lo = -9, long hi = 9);
  /// Each entry nonzero with probability `density`, values in [-2, 2].
  AlgebraSC sparse_algebra(std::size_t n, double density);
  Comultiplication sparse_delta(std::size_t n, double density);
  Matrix matrix(std::size_t rows, std::size_t cols, long lo = -5, long hi = 5);
  /// Monomial c * x^e in `nvars` variables of total degree <= max_degree.
  MultiPoly monomial(std::size_t nvars, unsigned max_degree, bool unit_coeff = false);
  MultiPoly polynomial(std::size_t nvars, unsigned max_degree, std::size_t terms);
  std::mt19937& engine() { return rng_; }

 private:
  std::mt19937 rng_;
};

/// Independent dense bilinear evaluation with plain GMP rationals.
std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> oracle_alia_failures(
    const AlgebraSC& a);

/// Independent representation check built from explicit vectors.
bool oracle_is_representation(const Representation& rep);

/// D computed monomial by monomial through the twisted Leibniz rule,
/// D(x_i) = delta_R(x_i), D(m x_i) = D(m) x_i + R(m) delta_R(x_i).
MultiPoly oracle_twisted_derivation(const ReflectionData& rd, const LinearAuto& r,
                                    const MultiPoly& f);

/// <a* (x) b*, delta(x)> evaluated by explicit sums.
Scalar oracle_pairing_delta(const Comultiplication& delta, const Vector& a_star,
                            const Vector& b_star, const Vector& x);

/// Failing basis pairs of the bialgebra compatibility, evaluated on explicit
/// tensor coordinates.
std::vector<std::pair<std::size_t, std::size_t>> oracle_bialgebra_failures(
    const AlgebraSC& a, const Comultiplication& delta);

/// [x, y]' = P^{-1} [P x, P y]; isomorphic to `a`.
AlgebraSC change_basis(const AlgebraSC& a, const Matrix& p);

/// Left-Alia algebras of dimension <= 3: even indices give a random
/// 2-dimensional algebra, odd ones the golden example in a random basis.
AlgebraSC random_left_alia(Gen& gen, std::size_t index);

}  // namespace alia::test
