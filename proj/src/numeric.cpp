#include "ascdesc/numeric.hpp"

#include <stdexcept>
#include <string>

namespace ascdesc::num {

namespace {

using Index = Eigen::Index;

void require_same_ambient(const FloatSubspace& y, const FloatSubspace& z) {
  if (y.ambient_dim != z.ambient_dim)
    throw DimensionError("ambient dimension mismatch: " + std::to_string(y.ambient_dim) + " vs " +
                         std::to_string(z.ambient_dim));
}

std::size_t rank_from_singular_values(const Eigen::VectorXd& s, double rank_rel) {
  if (s.size() == 0 || s(0) == 0.0) return 0;
  const double threshold = rank_rel * s(0);
  std::size_t r = 0;
  for (Index k = 0; k < s.size(); ++k)
    if (s(k) > threshold) ++r;
  return r;
}

}  // namespace

void Tolerance::validate() const {
  if (!(rank_rel > 0.0) || !(conv_tol > 0.0) || tail_window == 0)
    throw std::invalid_argument("tolerances must be strictly positive");
}

CMatrix to_float(const Matrix& a) {
  CMatrix out(static_cast<Index>(a.rows()), static_cast<Index>(a.cols()));
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(static_cast<Index>(r), static_cast<Index>(c)) = a(r, c).to_complex();
  return out;
}

FloatSubspace to_float(const Subspace& y) {
  const Index n = static_cast<Index>(y.ambient_dim());
  const Index k = static_cast<Index>(y.dim());
  CMatrix q(n, k);
  for (Index j = 0; j < k; ++j) {
    CVector v(n);
    for (Index i = 0; i < n; ++i) v(i) = y.basis()(static_cast<std::size_t>(j), static_cast<std::size_t>(i)).to_complex();
    // Two passes of modified Gram-Schmidt keep the basis orthonormal to working precision.
    for (int pass = 0; pass < 2; ++pass)
      for (Index p = 0; p < j; ++p) v -= q.col(p) * q.col(p).dot(v);
    q.col(j) = v / v.norm();
  }
  return {y.ambient_dim(), q};
}

FloatSubspace column_span(const CMatrix& cols, const Tolerance& tol) { return numeric_range(cols, tol); }

std::size_t numeric_rank(const CMatrix& a, const Tolerance& tol) {
  if (a.size() == 0) return 0;
  Eigen::JacobiSVD<CMatrix> svd(a);
  return rank_from_singular_values(svd.singularValues(), tol.rank_rel);
}

FloatSubspace numeric_kernel(const CMatrix& a, const Tolerance& tol) {
  const std::size_t n = static_cast<std::size_t>(a.cols());
  if (a.rows() == 0) return {n, CMatrix::Identity(a.cols(), a.cols())};
  if (n == 0) return FloatSubspace::zero(0);
  Eigen::JacobiSVD<CMatrix> svd(a, Eigen::ComputeFullV);
  const std::size_t r = rank_from_singular_values(svd.singularValues(), tol.rank_rel);
  return {n, svd.matrixV().rightCols(static_cast<Index>(n - r))};
}

FloatSubspace numeric_range(const CMatrix& a, const Tolerance& tol) {
  const std::size_t m = static_cast<std::size_t>(a.rows());
  if (a.cols() == 0 || m == 0) return FloatSubspace::zero(m);
  Eigen::JacobiSVD<CMatrix> svd(a, Eigen::ComputeFullU);
  const std::size_t r = rank_from_singular_values(svd.singularValues(), tol.rank_rel);
  return {m, svd.matrixU().leftCols(static_cast<Index>(r))};
}

double gamma(const CMatrix& a, const Tolerance& tol) {
  if (a.size() == 0) return kInfinity;
  Eigen::JacobiSVD<CMatrix> svd(a);
  const Eigen::VectorXd& s = svd.singularValues();
  const std::size_t r = rank_from_singular_values(s, tol.rank_rel);
  if (r == 0) return kInfinity;
  return s(static_cast<Index>(r - 1));
}

double delta(const FloatSubspace& y, const FloatSubspace& z) {
  require_same_ambient(y, z);
  if (y.dim() == 0) return 0.0;
  CMatrix residual = y.ortho_basis;
  if (z.dim() > 0) residual -= z.ortho_basis * (z.ortho_basis.adjoint() * y.ortho_basis);
  return spectral_norm(residual);
}

double gap(const FloatSubspace& y, const FloatSubspace& z) { return std::max(delta(y, z), delta(z, y)); }

double dist_to_subspace(const CVector& x, const FloatSubspace& y) {
  if (static_cast<std::size_t>(x.size()) != y.ambient_dim) throw DimensionError("vector length differs from ambient dimension");
  if (y.dim() == 0) return x.norm();
  return (x - y.ortho_basis * (y.ortho_basis.adjoint() * x)).norm();
}

CMatrix projector(const FloatSubspace& y) {
  const Index n = static_cast<Index>(y.ambient_dim);
  if (y.dim() == 0) return CMatrix::Zero(n, n);
  return y.ortho_basis * y.ortho_basis.adjoint();
}

double spectral_norm(const CMatrix& a) {
  if (a.size() == 0) return 0.0;
  Eigen::JacobiSVD<CMatrix> svd(a);
  return svd.singularValues()(0);
}

}  // namespace ascdesc::num
