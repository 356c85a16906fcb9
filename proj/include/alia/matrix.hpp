#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "alia/scalar.hpp"

namespace alia {

using Vector = std::vector<Scalar>;

Vector zero_vector(std::size_t n, const FieldSpec& field);
Vector basis_vector(std::size_t n, std::size_t i, const FieldSpec& field);
bool is_zero(const Vector& v);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Scalar& s, const Vector& v);
Scalar dot(const Vector& a, const Vector& b);

/// Dense row-major matrix over a single field. Column j is the image of the
/// j-th basis vector.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const FieldSpec& field);

  static Matrix identity(std::size_t n, const FieldSpec& field);
  /// Rows must all have the same length; entries must lie in `field`.
  static Matrix from_rows(const std::vector<Vector>& rows, const FieldSpec& field);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const FieldSpec& field() const { return field_; }
  bool is_square() const { return rows_ == cols_; }

  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  Vector row(std::size_t i) const;
  Vector column(std::size_t j) const;

  Matrix transpose() const;
  bool is_zero() const;
  bool is_symmetric() const;

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator-(const Matrix& a);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& s, const Matrix& a);
  friend Vector operator*(const Matrix& a, const Vector& v);
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  FieldSpec field_;
  std::vector<Scalar> data_;
};

Scalar determinant(const Matrix& m);
std::size_t rank(const Matrix& m);
/// nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);
Matrix power(const Matrix& m, unsigned exponent);
/// Block-diagonal sum diag(a, b).
Matrix direct_sum(const Matrix& a, const Matrix& b);

}  // namespace alia
