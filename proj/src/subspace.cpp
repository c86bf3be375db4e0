#include "ascdesc/subspace.hpp"

#include <string>

namespace ascdesc {

namespace {

void require_same_ambient(const Subspace& y, const Subspace& z) {
  if (y.ambient_dim() != z.ambient_dim())
    throw DimensionError("ambient dimension mismatch: " + std::to_string(y.ambient_dim()) + " vs " +
                         std::to_string(z.ambient_dim()));
}

Matrix stack(const Matrix& top, const Matrix& bottom) {
  Matrix m(top.rows() + bottom.rows(), top.cols());
  m.set_block(0, 0, top);
  m.set_block(top.rows(), 0, bottom);
  return m;
}

// Rows w with <w, y> = 0 (bilinear pairing) for every y in the subspace.
Matrix annihilator_rows(const Subspace& y) {
  if (y.is_zero()) return Matrix::identity(y.ambient_dim());
  return kernel_basis(y.basis()).basis();
}

}  // namespace

Subspace Subspace::zero(std::size_t ambient_dim) { return {ambient_dim, Matrix(0, ambient_dim), {}}; }

Subspace Subspace::full(std::size_t ambient_dim) {
  std::vector<std::size_t> piv(ambient_dim);
  for (std::size_t k = 0; k < ambient_dim; ++k) piv[k] = k;
  return {ambient_dim, Matrix::identity(ambient_dim), std::move(piv)};
}

Subspace Subspace::span_of_rows(const Matrix& rows) {
  auto [reduced, pivots] = rref(rows);
  return {rows.cols(), reduced.block(0, 0, pivots.size(), rows.cols()), std::move(pivots)};
}

Subspace Subspace::span_of(std::span<const Vector> vectors, std::size_t ambient_dim) {
  return span_of_rows(Matrix::from_rows(vectors, ambient_dim));
}

Vector Subspace::basis_vector(std::size_t k) const {
  auto r = basis_.row(k);
  return {r.begin(), r.end()};
}

Vector Subspace::coordinates(std::span<const Scalar> v) const {
  if (v.size() != ambient_) throw DimensionError("vector length differs from ambient dimension");
  // In RREF the coordinate on basis row k is the entry at its pivot column.
  Vector c(dim());
  for (std::size_t k = 0; k < dim(); ++k) c[k] = v[pivots_[k]];
  return c;
}

bool Subspace::contains(std::span<const Scalar> v) const {
  if (v.size() != ambient_) throw DimensionError("vector length differs from ambient dimension");
  Vector residual(v.begin(), v.end());
  for (std::size_t k = 0; k < dim(); ++k) {
    Scalar coef = residual[pivots_[k]];
    if (coef.is_zero()) continue;
    for (std::size_t j = 0; j < ambient_; ++j)
      if (!basis_(k, j).is_zero()) residual[j] -= coef * basis_(k, j);
  }
  return is_zero_vector(residual);
}

bool Subspace::is_subspace_of(const Subspace& other) const {
  require_same_ambient(*this, other);
  if (dim() > other.dim()) return false;
  for (std::size_t k = 0; k < dim(); ++k)
    if (!other.contains(basis_.row(k))) return false;
  return true;
}

Subspace kernel_basis(const Matrix& a) {
  auto [reduced, pivots] = rref(a);
  const std::size_t n = a.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> vecs;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vector v(n);
    v[f] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -reduced(k, f);
    vecs.push_back(std::move(v));
  }
  return Subspace::span_of(vecs, n);
}

Subspace image_basis(const Matrix& a) { return Subspace::span_of_rows(a.transpose()); }

Subspace subspace_sum(const Subspace& y, const Subspace& z) {
  require_same_ambient(y, z);
  return Subspace::span_of_rows(stack(y.basis(), z.basis()));
}

Subspace subspace_intersection(const Subspace& y, const Subspace& z) {
  require_same_ambient(y, z);
  const std::size_t n = y.ambient_dim();
  Matrix constraints = stack(annihilator_rows(y), annihilator_rows(z));
  if (constraints.rows() == 0) return Subspace::full(n);
  return kernel_basis(constraints);
}

bool is_direct_sum(std::span<const Subspace> parts) {
  if (parts.empty()) return true;
  for (std::size_t a = 1; a < parts.size(); ++a) require_same_ambient(parts[0], parts[a]);
  for (std::size_t a = 0; a < parts.size(); ++a)
    for (std::size_t b = a + 1; b < parts.size(); ++b)
      if (!subspace_intersection(parts[a], parts[b]).is_zero()) return false;
  Subspace total = Subspace::zero(parts[0].ambient_dim());
  std::size_t dims = 0;
  for (const auto& p : parts) {
    total = subspace_sum(total, p);
    dims += p.dim();
  }
  return total.dim() == dims;
}

Subspace complement_in(const Subspace& inner, const Subspace& outer) {
  require_same_ambient(inner, outer);
  std::vector<Vector> extension;
  Subspace current = inner;
  for (std::size_t k = 0; k < outer.dim(); ++k) {
    Vector v = outer.basis_vector(k);
    if (current.contains(v)) continue;
    const Vector one[] = {v};
    current = subspace_sum(current, Subspace::span_of(one, outer.ambient_dim()));
    extension.push_back(std::move(v));
  }
  return Subspace::span_of(extension, outer.ambient_dim());
}

}  // namespace ascdesc
