#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "alia/scalar.hpp"

namespace alia {

using Exponents = std::vector<std::uint32_t>;

/// Graded lexicographic order: total degree first, then x1 > x2 > ...
struct GrlexLess {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Sparse polynomial in K[x1, ..., xn]. Zero coefficients are never stored.
class MultiPoly {
 public:
  using TermMap = std::map<Exponents, Scalar, GrlexLess>;

  MultiPoly() = default;
  /// Zero polynomial.
  MultiPoly(std::size_t nvars, const FieldSpec& field);

  static MultiPoly constant(std::size_t nvars, const Scalar& c);
  /// x_{index + 1}; `index` is 0-based.
  static MultiPoly variable(std::size_t nvars, std::size_t index, const FieldSpec& field);
  static MultiPoly monomial(const Exponents& exps, const Scalar& c);

  std::size_t nvars() const { return nvars_; }
  const FieldSpec& field() const { return field_; }
  /// Ascending grlex order.
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// -1 for the zero polynomial.
  long total_degree() const;
  /// Largest term in grlex order. Throws DomainError on zero.
  std::pair<Exponents, Scalar> leading_term() const;

  /// Adds c * x^exps, dropping the term if it cancels.
  void add_term(const Exponents& exps, const Scalar& c);
  Scalar coeff(const Exponents& exps) const;

  MultiPoly pow(unsigned e) const;
  /// Division by one divisor in grlex order: *this = q * divisor + r, with no
  /// term of r divisible by the leading monomial of divisor.
  std::pair<MultiPoly, MultiPoly> divide(const MultiPoly& divisor) const;

  /// Descending grlex, e.g. "x1^2*x2 - 3*x3".
  std::string to_string() const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const Scalar& c, const MultiPoly& a);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

 private:
  void require_compatible(const MultiPoly& other, const char* op) const;

  std::size_t nvars_ = 0;
  FieldSpec field_;
  TermMap terms_;
};

/// Grammar: [sign] term {(+|-) term}; term = factor {'*' factor};
/// factor = integer ['/' integer] | '[' c0,...;m ']' | 'x'<k> ['^'<e>].
/// Whitespace is ignored. Throws ParseError with the character offset.
MultiPoly parse_poly(std::string_view src, std::size_t nvars, const FieldSpec& field);

}  // namespace alia
