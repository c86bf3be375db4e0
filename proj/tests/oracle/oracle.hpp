#pragma once

// Reference implementations used only by the tests. They share no code
// paths with the library's elimination, SVD or chain routines.

#include <cstddef>
#include <cstdint>

#include <Eigen/Dense>

#include "ascdesc/matrix.hpp"

namespace oracle {

using ascdesc::Matrix;

/// Rank by fraction-free Bareiss elimination over the Gaussian integers
/// (rows are first cleared of denominators).
std::size_t bareiss_rank(const Matrix& a);

/// Y = span of the rows of y is contained in span of the rows of z.
bool row_span_contained(const Matrix& y, const Matrix& z);

struct Chains {
  std::size_t asc = 0;
  std::size_t dsc = 0;
};

/// asc and dsc by comparing N(T^k) with N(T^{k+1}) and R(T^k) with R(T^{k+1})
/// through ranks of stacked powers, k = 0..dim+1.
Chains chains(const Matrix& t);

/// Smallest eigenvalue square root of A*A above rank_rel * largest; infinity for zero.
double gamma(const Eigen::MatrixXcd& a, double rank_rel = 1e-9);

/// Smallest |A x| over `samples` random unit vectors x orthogonal to N(A).
double gamma_sampled(const Eigen::MatrixXcd& a, std::size_t samples, std::uint64_t seed, double rank_rel = 1e-9);

/// δ(Y, Z) from arbitrary spanning columns, by Householder QR and a
/// Hermitian eigenproblem.
double delta(const Eigen::MatrixXcd& y_cols, const Eigen::MatrixXcd& z_cols);

}  // namespace oracle
