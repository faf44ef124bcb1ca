#include "frob/linalg.hpp"

#include <utility>

namespace frob {

Matrix::Matrix(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), entries_(rows * cols, Scalar::zero(field)) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : field_(entries.empty() ? FieldSpec::rational() : entries.front().field()),
      rows_(rows),
      cols_(cols),
      entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw Error(ErrorKind::ShapeMismatch, "matrix entry count does not match shape");
  }
  for (const auto& e : entries_) {
    if (!(e.field() == field_)) throw Error(ErrorKind::FieldMismatch, "mixed fields in matrix");
  }
}

Matrix Matrix::identity(FieldSpec field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(field);
  return m;
}

Matrix Matrix::from_columns(FieldSpec field, std::size_t rows, std::span<const Vector> columns) {
  Matrix m(field, rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw Error(ErrorKind::ShapeMismatch, "column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
  Vector out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Scalar Matrix::trace() const {
  Scalar t = Scalar::zero(field_);
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

bool Matrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r + 1; c < cols_; ++c)
      if ((*this)(r, c) != (*this)(c, r)) return false;
  return true;
}

Vector Matrix::apply(std::span<const Scalar> x) const {
  if (x.size() != cols_) throw Error(ErrorKind::ShapeMismatch, "matrix-vector size mismatch");
  Vector out(rows_, Scalar::zero(field_));
  for (std::size_t c = 0; c < cols_; ++c) {
    if (x[c].is_zero()) continue;
    for (std::size_t r = 0; r < rows_; ++r) {
      const Scalar& a = (*this)(r, c);
      if (!a.is_zero()) out[r] += a * x[c];
    }
  }
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorKind::ShapeMismatch, "matrix product shape mismatch");
  Matrix out(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Scalar& bkj = b(k, j);
        if (!bkj.is_zero()) out(i, j) += aik * bkj;
      }
    }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorKind::ShapeMismatch, "matrix sum");
  Matrix out = a;
  for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] += b.entries_[i];
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorKind::ShapeMismatch, "matrix sum");
  Matrix out = a;
  for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] -= b.entries_[i];
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

Echelon row_reduce(Matrix m) {
  std::vector<std::size_t> pivots;
  std::size_t lead_row = 0;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  for (std::size_t c = 0; c < cols && lead_row < rows; ++c) {
    std::size_t p = lead_row;
    while (p < rows && m(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != lead_row)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(p, j), m(lead_row, j));
    const Scalar inv = m(lead_row, c).inv();
    for (std::size_t j = c; j < cols; ++j)
      if (!m(lead_row, j).is_zero()) m(lead_row, j) *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == lead_row || m(r, c).is_zero()) continue;
      const Scalar factor = m(r, c);
      for (std::size_t j = c; j < cols; ++j) {
        const Scalar& src = m(lead_row, j);
        if (!src.is_zero()) m(r, j) -= factor * src;
      }
    }
    pivots.push_back(c);
    ++lead_row;
  }
  return {std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return row_reduce(m).rank(); }

Scalar determinant(Matrix m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::ShapeMismatch, "determinant of non-square matrix");
  const std::size_t n = m.rows();
  Scalar det = Scalar::one(m.field());
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c).is_zero()) ++p;
    if (p == n) return Scalar::zero(m.field());
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    const Scalar inv = m(c, c).inv();
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m(r, c).is_zero()) continue;
      const Scalar factor = m(r, c) * inv;
      for (std::size_t j = c; j < n; ++j)
        if (!m(c, j).is_zero()) m(r, j) -= factor * m(c, j);
    }
  }
  return det;
}

std::optional<Vector> solve(const Matrix& m, std::span<const Scalar> b) {
  if (b.size() != m.rows()) throw Error(ErrorKind::ShapeMismatch, "right-hand side length mismatch");
  Matrix aug(m.field(), m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    if (!(b[r].field() == m.field())) throw Error(ErrorKind::FieldMismatch, "solve");
    aug(r, m.cols()) = b[r];
  }
  Echelon ech = row_reduce(std::move(aug));
  if (!ech.pivots.empty() && ech.pivots.back() == m.cols()) return std::nullopt;
  Vector x(m.cols(), Scalar::zero(m.field()));
  for (std::size_t i = 0; i < ech.pivots.size(); ++i) x[ech.pivots[i]] = ech.reduced(i, m.cols());
  return x;
}

Matrix invert(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::Singular, "non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return m;
  Matrix aug(m.field(), n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = Scalar::one(m.field());
  }
  Echelon ech = row_reduce(std::move(aug));
  if (ech.rank() < n || ech.pivots[n - 1] != n - 1) throw Error(ErrorKind::Singular, "matrix is singular");
  Matrix inv(m.field(), n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = ech.reduced(r, n + c);
  return inv;
}

std::vector<Vector> nullspace(const Matrix& m) {
  Echelon ech = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : ech.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols(), Scalar::zero(m.field()));
    v[free] = Scalar::one(m.field());
    for (std::size_t i = 0; i < ech.pivots.size(); ++i) v[ech.pivots[i]] = -ech.reduced(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Vector> span_basis(FieldSpec field, std::size_t dim, std::span<const Vector> vectors) {
  Matrix rows(field, vectors.size(), dim);
  for (std::size_t r = 0; r < vectors.size(); ++r) {
    if (vectors[r].size() != dim) throw Error(ErrorKind::ShapeMismatch, "span_basis vector length");
    for (std::size_t c = 0; c < dim; ++c) rows(r, c) = vectors[r][c];
  }
  Echelon ech = row_reduce(std::move(rows));
  std::vector<Vector> basis;
  for (std::size_t i = 0; i < ech.rank(); ++i) basis.push_back(ech.reduced.row(i));
  return basis;
}

bool in_span(FieldSpec field, std::span<const Vector> basis, std::span<const Scalar> v) {
  if (basis.empty()) return is_zero_vector(v);
  Matrix m = Matrix::from_columns(field, v.size(), basis);
  return solve(m, v).has_value();
}

std::vector<Scalar> minimal_polynomial(FieldSpec field, std::span<const Vector> vectors) {
  for (std::size_t k = 0; k < vectors.size(); ++k) {
    std::optional<Vector> coeffs;
    if (k == 0) {
      if (is_zero_vector(vectors[0])) coeffs = Vector{};
    } else {
      Matrix m = Matrix::from_columns(field, vectors[k].size(), vectors.first(k));
      Vector rhs;
      for (const auto& x : vectors[k]) rhs.push_back(-x);
      coeffs = solve(m, rhs);
    }
    if (coeffs) {
      coeffs->push_back(Scalar::one(field));
      return *coeffs;
    }
  }
  throw Error(ErrorKind::NotFound, "sequence too short to close a linear relation");
}

Vector zero_vector(FieldSpec field, std::size_t n) { return Vector(n, Scalar::zero(field)); }

bool is_zero_vector(std::span<const Scalar> v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Vector axpy(const Scalar& a, std::span<const Scalar> x, Vector y) {
  if (x.size() != y.size()) throw Error(ErrorKind::ShapeMismatch, "axpy length mismatch");
  if (a.is_zero()) return y;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) y[i] += a * x[i];
  return y;
}

Scalar dot(std::span<const Scalar> a, std::span<const Scalar> b) {
  if (a.size() != b.size() || a.empty()) {
    if (a.size() != b.size()) throw Error(ErrorKind::ShapeMismatch, "dot length mismatch");
    return Scalar();
  }
  Scalar s = Scalar::zero(a.front().field());
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  return s;
}

}  // namespace frob
