#pragma once

#include <cstddef>
#include <limits>

#include <Eigen/Dense>

#include "ascdesc/matrix.hpp"
#include "ascdesc/subspace.hpp"

namespace ascdesc::num {

using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

constexpr double kInfinity = std::numeric_limits<double>::infinity();

struct Tolerance {
  /// Singular values below rank_rel * sigma_max count as zero.
  double rank_rel = 1e-9;
  double conv_tol = 1e-6;
  std::size_t tail_window = 5;

  /// Throws std::invalid_argument unless every field is strictly positive.
  void validate() const;
};

/// Subspace of C^n with a column-orthonormal basis.
struct FloatSubspace {
  std::size_t ambient_dim = 0;
  CMatrix ortho_basis;  // ambient_dim x dim

  std::size_t dim() const { return static_cast<std::size_t>(ortho_basis.cols()); }
  static FloatSubspace zero(std::size_t n) { return {n, CMatrix(static_cast<Eigen::Index>(n), 0)}; }
};

CMatrix to_float(const Matrix& a);
/// Orthonormalizes the canonical basis (modified Gram-Schmidt on the RREF rows, in order).
FloatSubspace to_float(const Subspace& y);

/// Orthonormal basis of the span of the columns of `cols`, via SVD with the given rank threshold.
FloatSubspace column_span(const CMatrix& cols, const Tolerance& tol = {});

std::size_t numeric_rank(const CMatrix& a, const Tolerance& tol = {});
FloatSubspace numeric_kernel(const CMatrix& a, const Tolerance& tol = {});
FloatSubspace numeric_range(const CMatrix& a, const Tolerance& tol = {});

/// Reduced minimum modulus: the smallest singular value above the rank
/// threshold; infinity for the zero matrix.
double gamma(const CMatrix& a, const Tolerance& tol = {});

/// sup over x in Y, |x| <= 1, of dist(x, Z); zero when Y = {0}.
double delta(const FloatSubspace& y, const FloatSubspace& z);
/// max(delta(Y,Z), delta(Z,Y)).
double gap(const FloatSubspace& y, const FloatSubspace& z);
double dist_to_subspace(const CVector& x, const FloatSubspace& y);

/// Orthogonal projector Q Q^*.
CMatrix projector(const FloatSubspace& y);
double spectral_norm(const CMatrix& a);

}  // namespace ascdesc::num
