#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace alia {

using Integer = mpz_class;
using Rational = mpq_class;

/// Coefficients (lowest degree first) of the m-th cyclotomic polynomial.
std::vector<Integer> cyclotomic_polynomial(unsigned m);

/// Selects the ground field: Q, or the cyclotomic field Q(zeta_m) realised as
/// Q[t]/Phi_m(t). Copies share the (immutable) modulus.
class FieldSpec {
 public:
  enum class Kind { rational, cyclotomic };

  FieldSpec();

  static FieldSpec rational();
  static FieldSpec cyclotomic(unsigned order);

  /// Accepts "rational" or "cyclotomic:<m>".
  static FieldSpec parse(std::string_view text);

  Kind kind() const { return kind_; }
  bool is_rational() const { return kind_ == Kind::rational; }
  /// m for Q(zeta_m); 1 for Q.
  unsigned order() const { return order_; }
  /// Dimension over Q (deg Phi_m, or 1).
  std::size_t degree() const { return modulus_->size() - 1; }
  /// Monic modulus, lowest degree first. For Q this is t.
  const std::vector<Integer>& modulus() const { return *modulus_; }

  std::string to_string() const;

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
    return a.kind_ == b.kind_ && a.order_ == b.order_;
  }

 private:
  FieldSpec(Kind kind, unsigned order,
            std::shared_ptr<const std::vector<Integer>> modulus);

  Kind kind_;
  unsigned order_;
  std::shared_ptr<const std::vector<Integer>> modulus_;
};

/// Exact element of a FieldSpec. Rationals are kept in lowest terms,
/// cyclotomic values as the canonical residue modulo Phi_m, so equal values
/// have identical representations.
class Scalar {
 public:
  /// Rational zero.
  Scalar();
  explicit Scalar(const Rational& value);
  explicit Scalar(long value);
  Scalar(const Rational& value, const FieldSpec& field);

  static Scalar zero(const FieldSpec& field);
  static Scalar one(const FieldSpec& field);
  /// Residue of sum c_k t^k; any number of coefficients is accepted for
  /// cyclotomic fields. Over Q only c_0 may be nonzero (DomainError otherwise).
  static Scalar from_coefficients(std::vector<Rational> coeffs,
                                  const FieldSpec& field);

  const FieldSpec& field() const { return field_; }
  /// Canonical coefficient vector, length field().degree().
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  /// True when the value lies in the prime field Q.
  bool is_rational_value() const;
  /// The value as a rational; throws DomainError if it is not one.
  const Rational& rational_value() const;

  Scalar inverse() const;
  Scalar pow(unsigned exponent) const;
  /// The same value in another field (Q embeds into every Q(zeta_m)).
  Scalar embed(const FieldSpec& target) const;

  /// "p/q" or "p" for rational fields, "[c0,...,c_{d-1};m]" otherwise.
  std::string to_string() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  Scalar& operator/=(const Scalar& other);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  /// Throws DomainError if the fields differ.
  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  void require_same_field(const Scalar& other, const char* op) const;
  void reduce();

  FieldSpec field_;
  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// The canonical generator zeta_m = [t] of Q(zeta_m). Requires m >= 2.
Scalar primitive_root(unsigned m);

/// Multiplicative order of `s` if it is at most `bound`, else 0.
unsigned multiplicative_order(const Scalar& s, unsigned bound);

/// Parses "p", "p/q" or "[c0,c1,...;m]". Rational literals are embedded into
/// `field`; a bracketed literal must name the same cyclotomic order.
Scalar parse_scalar(std::string_view text, const FieldSpec& field);

}  // namespace alia
