#pragma once

#include <optional>
#include <span>
#include <vector>

#include "frob/scalar.hpp"

namespace frob {

using Vector = std::vector<Scalar>;

/// Dense row-major matrix of exact scalars sharing one field.
class Matrix {
public:
  Matrix(FieldSpec field, std::size_t rows, std::size_t cols);
  Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries);

  static Matrix identity(FieldSpec field, std::size_t n);
  /// Builds a matrix whose columns are the given vectors.
  static Matrix from_columns(FieldSpec field, std::size_t rows, std::span<const Vector> columns);

  const FieldSpec& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::vector<Scalar>& entries() const { return entries_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  Matrix transpose() const;
  Scalar trace() const;
  bool is_symmetric() const;

  Vector apply(std::span<const Scalar> x) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

private:
  FieldSpec field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> entries_;
};

/// Reduced row echelon form; `pivots` lists the pivot column of each nonzero row.
struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return pivots.size(); }
};

/// Gauss-Jordan elimination choosing the first nonzero entry as pivot.
Echelon row_reduce(Matrix m);

std::size_t rank(const Matrix& m);
Scalar determinant(Matrix m);

/// One solution of M x = b, or nullopt when the system is inconsistent.
std::optional<Vector> solve(const Matrix& m, std::span<const Scalar> b);

/// Throws Error{Singular}.
Matrix invert(const Matrix& m);

/// Basis of {x : M x = 0}, one vector per free column.
std::vector<Vector> nullspace(const Matrix& m);

/// Basis of the span of the given vectors (rows of the reduced echelon form).
std::vector<Vector> span_basis(FieldSpec field, std::size_t dim, std::span<const Vector> vectors);

/// Whether v lies in the span of `basis`.
bool in_span(FieldSpec field, std::span<const Vector> basis, std::span<const Scalar> v);

/// For a sequence v_0, v_1, ... returns the monic relation of least length:
/// coefficients c_0..c_{k-1}, 1 with v_k + c_{k-1} v_{k-1} + ... + c_0 v_0 = 0.
/// Throws Error{NotFound} when no prefix of the sequence is dependent.
std::vector<Scalar> minimal_polynomial(FieldSpec field, std::span<const Vector> vectors);

// Small vector helpers used throughout.
Vector zero_vector(FieldSpec field, std::size_t n);
bool is_zero_vector(std::span<const Scalar> v);
Vector axpy(const Scalar& a, std::span<const Scalar> x, Vector y);
Scalar dot(std::span<const Scalar> a, std::span<const Scalar> b);

}  // namespace frob
