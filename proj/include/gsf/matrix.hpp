#pragma once

#include <gsf/field.hpp>

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace gsf {

/// Dense row-major matrix over a Field. Indices are 0-based here; the
/// 1-based positions used by the equations live in `combinatorics`.
class Matrix {
 public:
  Matrix(Field f, std::size_t rows, std::size_t cols);

  static Matrix identity(Field f, std::size_t n);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix transpose() const;
  /// Rows and columns picked (and reordered) by the given 0-based indices.
  Matrix submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const;
  bool is_identity() const;
  bool is_zero() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

/// First entry where two equally-shaped matrices differ, row-major.
struct Mismatch {
  std::size_t row;
  std::size_t col;
};
std::optional<Mismatch> first_mismatch(const Matrix& a, const Matrix& b);

/// Ambient identity of size `dim` with `local` written into the given 1-based
/// rows/columns. Throws InputError if a position overflows or sizes differ.
Matrix embed(const Matrix& local, std::span<const int> positions, std::size_t dim);

/// m ← m · embed(local, positions, m.cols()), touching only the listed columns.
void apply_right(Matrix& m, const Matrix& local, std::span<const int> positions);

namespace linalg {

/// Exact rank. Over the rationals rows are cleared of denominators and
/// reduced with fraction-free (Bareiss) elimination on integers.
std::size_t rank(const Matrix& m);

/// Exact determinant of a square matrix; Bareiss over the rationals.
Scalar determinant(const Matrix& m);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);

}  // namespace linalg

}  // namespace gsf
