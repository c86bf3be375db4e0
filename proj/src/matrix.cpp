#include "ascdesc/matrix.hpp"

#include <string>
#include <utility>

namespace ascdesc {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw DimensionError(what);
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  require(data_.size() == rows_ * cols_, "entries length must equal rows*cols");
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    require(r.size() == cols_, "ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::diagonal(std::span<const Scalar> diag) {
  Matrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

Matrix Matrix::jordan_block(std::size_t n, const Scalar& lambda) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = lambda;
    if (i + 1 < n) m(i, i + 1) = 1;
  }
  return m;
}

Matrix Matrix::from_rows(std::span<const Vector> rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    require(rows[r].size() == cols, "row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::is_zero() const { return is_zero_vector(data_); }

bool Matrix::is_idempotent() const { return is_square() && mat_mul(*this, *this) == *this; }

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  require(r0 + nr <= rows_ && c0 + nc <= cols_, "block out of range");
  Matrix b(nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
  return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
  require(r0 + b.rows() <= rows_ && c0 + b.cols() <= cols_, "block out of range");
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) (*this)(r0 + r, c0 + c) = b(r, c);
}

Matrix& Matrix::operator+=(const Matrix& o) {
  require(rows_ == o.rows_ && cols_ == o.cols_, "matrix sum: shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k)
    if (!o.data_[k].is_zero()) data_[k] += o.data_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  require(rows_ == o.rows_ && cols_ == o.cols_, "matrix difference: shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k)
    if (!o.data_[k].is_zero()) data_[k] -= o.data_[k];
  return *this;
}

Matrix& Matrix::operator*=(const Scalar& s) {
  for (auto& x : data_)
    if (!x.is_zero()) x *= s;
  return *this;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  require(a.cols() == b.rows(), "matrix product: inner dimensions differ");
  Matrix c(a.rows(), b.cols());
  Scalar tmp;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const Scalar& bkj = b(k, j);
        if (bkj.is_zero()) continue;
        if (aik.is_one()) {
          c(i, j) += bkj;
        } else {
          tmp = aik;
          tmp *= bkj;
          c(i, j) += tmp;
        }
      }
    }
  }
  return c;
}

Matrix mat_add(const Matrix& a, const Matrix& b) {
  Matrix c = a;
  c += b;
  return c;
}

Matrix mat_sub(const Matrix& a, const Matrix& b) {
  Matrix c = a;
  c -= b;
  return c;
}

Matrix mat_scale(const Matrix& a, const Scalar& s) {
  Matrix c = a;
  c *= s;
  return c;
}

Matrix mat_pow(const Matrix& a, std::size_t k) {
  require(a.is_square(), "matrix power needs a square matrix");
  Matrix result = Matrix::identity(a.rows());
  Matrix base = a;
  while (k > 0) {
    if (k & 1U) result = mat_mul(result, base);
    k >>= 1U;
    if (k > 0) base = mat_mul(base, base);
  }
  return result;
}

Matrix scalar_shift(const Matrix& a, const Scalar& lambda) {
  require(a.is_square(), "scalar shift needs a square matrix");
  Matrix c = a;
  if (lambda.is_zero()) return c;
  for (std::size_t i = 0; i < a.rows(); ++i) c(i, i) -= lambda;
  return c;
}

Vector mat_vec(const Matrix& a, std::span<const Scalar> x) {
  require(a.cols() == x.size(), "matrix-vector product: size mismatch");
  Vector y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      if (!a(i, k).is_zero() && !x[k].is_zero()) y[i] += a(i, k) * x[k];
  return y;
}

Matrix block_diagonal(std::span<const Matrix> blocks) {
  std::size_t r = 0, c = 0;
  for (const auto& b : blocks) {
    r += b.rows();
    c += b.cols();
  }
  Matrix m(r, c);
  r = c = 0;
  for (const auto& b : blocks) {
    m.set_block(r, c, b);
    r += b.rows();
    c += b.cols();
  }
  return m;
}

Matrix block_diagonal(const Matrix& a, const Matrix& b) {
  const Matrix parts[] = {a, b};
  return block_diagonal(parts);
}

Scalar trace(const Matrix& a) {
  require(a.is_square(), "trace needs a square matrix");
  Scalar t;
  for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

bool is_zero_vector(std::span<const Scalar> v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

RrefResult rref(const Matrix& a) {
  Matrix m = a;
  std::vector<std::size_t> pivots;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t pr = 0;
  Scalar factor, tmp;
  for (std::size_t c = 0; c < cols && pr < rows; ++c) {
    std::size_t sel = pr;
    while (sel < rows && m(sel, c).is_zero()) ++sel;
    if (sel == rows) continue;
    if (sel != pr)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(sel, j), m(pr, j));
    if (!m(pr, c).is_one()) {
      Scalar inv = m(pr, c).inverse();
      for (std::size_t j = c; j < cols; ++j)
        if (!m(pr, j).is_zero()) m(pr, j) *= inv;
    }
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == pr || m(r, c).is_zero()) continue;
      factor = m(r, c);
      for (std::size_t j = c; j < cols; ++j) {
        if (m(pr, j).is_zero()) continue;
        tmp = factor;
        tmp *= m(pr, j);
        m(r, j) -= tmp;
      }
    }
    pivots.push_back(c);
    ++pr;
  }
  return {std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix& a) { return rref(a).pivots.size(); }

Matrix inverse(const Matrix& a) {
  require(a.is_square(), "inverse needs a square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return {};
  Matrix aug(n, 2 * n);
  aug.set_block(0, 0, a);
  aug.set_block(0, n, Matrix::identity(n));
  auto [r, pivots] = rref(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw std::domain_error("matrix is singular");
  return r.block(0, n, n, n);
}

}  // namespace ascdesc
