#include <gsf/matrix.hpp>

#include <string>
#include <utility>

namespace gsf {

Matrix::Matrix(Field f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, f.zero()) {}

Matrix Matrix::identity(Field f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const {
  Matrix s(field_, rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) s(i, j) = (*this)(rows[i], cols[j]);
  return s;
}

bool Matrix::is_identity() const { return is_square() && *this == identity(field_, rows_); }

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("matrix shape mismatch in +");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("matrix shape mismatch in -");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw InputError("matrix shape mismatch in *");
  Matrix c(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) c(i, j) += aik * b(k, j);
    }
  return c;
}

std::optional<Mismatch> first_mismatch(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return Mismatch{0, 0};
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (!(a(r, c) == b(r, c))) return Mismatch{r, c};
  return std::nullopt;
}

namespace {

void check_positions(const Matrix& local, std::span<const int> positions, std::size_t dim) {
  if (!local.is_square() || local.rows() != positions.size())
    throw InputError("local matrix size does not match its position set");
  for (int p : positions)
    if (p < 1 || static_cast<std::size_t>(p) > dim)
      throw InputError("position " + std::to_string(p) + " outside ambient dimension " + std::to_string(dim));
}

}  // namespace

Matrix embed(const Matrix& local, std::span<const int> positions, std::size_t dim) {
  check_positions(local, positions, dim);
  Matrix m = Matrix::identity(local.field(), dim);
  for (std::size_t i = 0; i < positions.size(); ++i)
    for (std::size_t j = 0; j < positions.size(); ++j)
      m(static_cast<std::size_t>(positions[i] - 1), static_cast<std::size_t>(positions[j] - 1)) = local(i, j);
  return m;
}

void apply_right(Matrix& m, const Matrix& local, std::span<const int> positions) {
  check_positions(local, positions, m.cols());
  const std::size_t k = positions.size();
  std::vector<Scalar> in;
  in.reserve(k);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    in.clear();
    bool any = false;
    for (int p : positions) {
      in.push_back(m(r, static_cast<std::size_t>(p - 1)));
      any = any || !in.back().is_zero();
    }
    if (!any) continue;
    for (std::size_t j = 0; j < k; ++j) {
      Scalar acc = m.field().zero();
      for (std::size_t i = 0; i < k; ++i)
        if (!in[i].is_zero() && !local(i, j).is_zero()) acc += in[i] * local(i, j);
      m(r, static_cast<std::size_t>(positions[j] - 1)) = std::move(acc);
    }
  }
}

namespace linalg {

namespace {

using IntMatrix = std::vector<std::vector<mpz_class>>;

// Scales each row by the lcm of its denominators. Returns the integer matrix
// and the product of the scale factors.
std::pair<IntMatrix, mpz_class> clear_denominators(const Matrix& m) {
  IntMatrix out(m.rows(), std::vector<mpz_class>(m.cols()));
  mpz_class scale = 1;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) l = lcm(l, m(r, c).rational().get_den());
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const mpq_class& q = m(r, c).rational();
      out[r][c] = q.get_num() * (l / q.get_den());
    }
    scale *= l;
  }
  return {std::move(out), scale};
}

// Fraction-free elimination in place. Returns the rank; `sign` tracks row swaps
// and, for a square full-rank input, a[n-1][n-1] ends up as sign * det.
std::size_t bareiss(IntMatrix& a, int& sign) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  sign = 1;
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r) {
      std::swap(a[piv], a[r]);
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[i][j] = (a[i][j] * a[r][c] - a[i][c] * a[r][j]);
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

// Gaussian elimination over a finite field; returns rank and the product of pivots
// (with swap sign) through `det`.
std::size_t gauss(Matrix a, Scalar& det) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  det = a.field().one();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a(piv, c).is_zero()) ++piv;
    if (piv == rows) {
      det = a.field().zero();
      continue;
    }
    if (piv != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(piv, j), a(r, j));
      det = -det;
    }
    det *= a(r, c);
    const Scalar inv = a(r, c).inverse();
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (a(i, c).is_zero()) continue;
      const Scalar f = a(i, c) * inv;
      for (std::size_t j = c; j < cols; ++j) a(i, j) -= f * a(r, j);
    }
    ++r;
  }
  if (r < rows) det = a.field().zero();
  return r;
}

}  // namespace

std::size_t rank(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  if (m.field().kind() == FieldKind::rationals) {
    auto [a, scale] = clear_denominators(m);
    int sign;
    return bareiss(a, sign);
  }
  Scalar det = m.field().zero();
  return gauss(m, det);
}

Scalar determinant(const Matrix& m) {
  if (!m.is_square()) throw InputError("determinant of a non-square matrix");
  const Field f = m.field();
  if (m.rows() == 0) return f.one();
  if (f.kind() == FieldKind::rationals) {
    auto [a, scale] = clear_denominators(m);
    int sign;
    const std::size_t r = bareiss(a, sign);
    if (r < m.rows()) return f.zero();
    mpq_class d(a.back().back() * sign, scale);
    return Scalar(f, d);
  }
  Scalar det = f.zero();
  gauss(m, det);
  return det;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.is_square()) throw InputError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  const Field f = m.field();
  Matrix a = m;
  Matrix inv = Matrix::identity(f, n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a(piv, c).is_zero()) ++piv;
    if (piv == n) return std::nullopt;
    if (piv != c)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(piv, j), a(c, j));
        std::swap(inv(piv, j), inv(c, j));
      }
    const Scalar s = a(c, c).inverse();
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) *= s;
      inv(c, j) *= s;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a(i, c).is_zero()) continue;
      const Scalar fac = a(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= fac * a(c, j);
        inv(i, j) -= fac * inv(c, j);
      }
    }
  }
  return inv;
}

}  // namespace linalg

}  // namespace gsf
