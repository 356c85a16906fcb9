#pragma once

#include <optional>
#include <string>
#include <vector>

#include "alia/matrix.hpp"
#include "alia/poly.hpp"

namespace alia {

/// Linear automorphism of K[x1..xn]: R(x_i) = sum_j matrix(i, j) x_j, i.e.
/// row i holds the image of x_i.
class LinearAuto {
 public:
  LinearAuto() = default;
  /// Throws ShapeError unless square, DomainError unless invertible.
  explicit LinearAuto(Matrix matrix, std::optional<unsigned> order_hint = std::nullopt);

  std::size_t nvars() const { return matrix_.rows(); }
  const FieldSpec& field() const { return matrix_.field(); }
  const Matrix& matrix() const { return matrix_; }
  std::optional<unsigned> order_hint() const { return order_hint_; }

 private:
  Matrix matrix_;
  std::optional<unsigned> order_hint_;
};

/// Substitutes x_i by its image and extends multiplicatively.
MultiPoly apply_auto(const LinearAuto& r, const MultiPoly& f);

/// The automorphism induced on the other side of the pairing (inverse transpose).
LinearAuto dual_auto(const LinearAuto& r);

/// (I - R) x_i = delta_r[i] * l_r, with the first nonzero coefficient of l_r equal to 1.
struct ReflectionData {
  MultiPoly l_r;
  Vector delta_r;
  unsigned order = 0;
  /// The eigenvalue other than 1: trace(R) - (n - 1).
  Scalar omega;
};

struct ReflectionResult {
  bool is_reflection = false;
  /// Empty on success.
  std::string reason;
  std::optional<ReflectionData> data;
};

constexpr unsigned default_max_order = 24;

/// rank(I - R) = 1 and R^m = I for some m <= max_order (the order hint, if
/// larger, extends the search).
ReflectionResult is_pseudo_reflection(const LinearAuto& r, unsigned max_order = default_max_order);

/// D(f) = (f - R f) / l_R by exact division. Throws ConsistencyError if the
/// division leaves a remainder, which means `rd` does not belong to `r`.
MultiPoly twisted_derivation(const ReflectionData& rd, const LinearAuto& r, const MultiPoly& f);

enum class BracketVariant {
  theorem,  // [f, g] = f D(g) - R(g) D(f)
  intro,    // [f, g] = D(f) g - R(f) D(g)
};

MultiPoly poly_alia_bracket(const ReflectionData& rd, const LinearAuto& r, const MultiPoly& f,
                            const MultiPoly& g, BracketVariant variant = BracketVariant::theorem);

/// [f, g, h] = 1/2 [[f,g] - [g,f], h].
MultiPoly poly_lie_triple(const ReflectionData& rd, const LinearAuto& r, const MultiPoly& f,
                          const MultiPoly& g, const MultiPoly& h,
                          BracketVariant variant = BracketVariant::theorem);

/// apply_auto(g, f) == f for every generator g.
bool invariance_check(const MultiPoly& f, const std::vector<LinearAuto>& generators);

}  // namespace alia
