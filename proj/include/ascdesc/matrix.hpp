#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "ascdesc/gaussian_rational.hpp"

namespace ascdesc {

using Scalar = GaussianRational;
using Vector = std::vector<Scalar>;

/// Dense row-major matrix over Q(i).
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries);
  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }
  static Matrix diagonal(std::span<const Scalar> diag);
  static Matrix diagonal(std::initializer_list<Scalar> diag) { return diagonal(std::span<const Scalar>(diag.begin(), diag.size())); }
  /// Single Jordan block J_n(lambda): lambda on the diagonal, ones above it.
  static Matrix jordan_block(std::size_t n, const Scalar& lambda = Scalar{});
  /// Matrix whose rows are the given vectors (all of length `cols`).
  static Matrix from_rows(std::span<const Vector> rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool empty() const { return data_.empty(); }

  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<Scalar> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  Vector column(std::size_t c) const;
  const std::vector<Scalar>& entries() const { return data_; }

  Matrix transpose() const;
  bool is_zero() const;
  bool is_idempotent() const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b);

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Scalar& s);

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Matrix mat_mul(const Matrix& a, const Matrix& b);
Matrix mat_add(const Matrix& a, const Matrix& b);
Matrix mat_sub(const Matrix& a, const Matrix& b);
Matrix mat_scale(const Matrix& a, const Scalar& s);
/// A^k with A^0 = I.
Matrix mat_pow(const Matrix& a, std::size_t k);
/// A - lambda*I.
Matrix scalar_shift(const Matrix& a, const Scalar& lambda);
Vector mat_vec(const Matrix& a, std::span<const Scalar> x);
/// Block-diagonal matrix diag(blocks...).
Matrix block_diagonal(std::span<const Matrix> blocks);
Matrix block_diagonal(const Matrix& a, const Matrix& b);
Scalar trace(const Matrix& a);

inline Matrix operator*(const Matrix& a, const Matrix& b) { return mat_mul(a, b); }
inline Matrix operator+(const Matrix& a, const Matrix& b) { return mat_add(a, b); }
inline Matrix operator-(const Matrix& a, const Matrix& b) { return mat_sub(a, b); }

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

/// Unique reduced row-echelon form by Gauss-Jordan elimination.
RrefResult rref(const Matrix& a);
std::size_t rank(const Matrix& a);
/// Exact inverse; throws std::domain_error if `a` is singular.
Matrix inverse(const Matrix& a);

bool is_zero_vector(std::span<const Scalar> v);

}  // namespace ascdesc
