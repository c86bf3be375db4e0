#include "ascdesc/chain.hpp"

#include <stdexcept>

namespace ascdesc {

ChainReport chain_report(const Matrix& t) {
  if (!t.is_square()) throw DimensionError("chain report needs a square matrix");
  const std::size_t n = t.rows();
  ChainReport rep;
  rep.ambient_dim = n;
  rep.kernel_dims.push_back(0);
  rep.range_dims.push_back(n);

  std::optional<std::size_t> asc, dsc;
  Matrix power = Matrix::identity(n);
  for (std::size_t k = 1; !(asc && dsc); ++k) {
    if (k > n + 1) throw std::logic_error("chain failed to stabilize within the ambient dimension");
    power = mat_mul(power, t);
    std::size_t ker = n - rank(power);
    std::size_t rng = rank(power.transpose());
    rep.kernel_dims.push_back(ker);
    rep.range_dims.push_back(rng);
    if (!asc && ker == rep.kernel_dims[k - 1]) asc = k - 1;
    if (!dsc && rng == rep.range_dims[k - 1]) dsc = k - 1;
  }
  rep.asc = *asc;
  rep.dsc = *dsc;
  rep.alpha = rep.kernel_dims.size() > 1 ? rep.kernel_dims[1] : 0;
  rep.beta = rep.range_dims.size() > 1 ? n - rep.range_dims[1] : 0;
  return rep;
}

AscPredicate prop_asc_predicate(const Matrix& t, std::size_t m) {
  const std::size_t d = t.rows();
  Subspace range = image_basis(mat_pow(t, m));
  Subspace kernel = kernel_basis(mat_pow(t, d));
  Subspace meet = subspace_intersection(range, kernel);
  AscPredicate out;
  out.holds = meet.is_zero();
  if (!out.holds) out.witness = meet.basis_vector(0);
  return out;
}

bool is_complement(const Subspace& y, const Subspace& r) {
  const Subspace parts[] = {y, r};
  return is_direct_sum(parts) && y.dim() + r.dim() == y.ambient_dim();
}

DscPredicate prop_dsc_predicate(const Matrix& t, std::size_t m) {
  const std::size_t d = t.rows();
  Subspace kernel = kernel_basis(mat_pow(t, m));
  DscPredicate out;
  std::vector<Subspace> witnesses;
  Matrix power = Matrix::identity(d);
  for (std::size_t n = 0; n <= d; ++n) {
    if (n > 0) power = mat_mul(power, t);
    Subspace range = image_basis(power);
    if (!subspace_sum(kernel, range).is_full()) {
      out.failing_n.push_back(n);
      continue;
    }
    witnesses.push_back(complement_in(subspace_intersection(kernel, range), kernel));
  }
  out.holds = out.failing_n.empty();
  if (out.holds) out.witnesses = std::move(witnesses);
  return out;
}

Matrix compression(const Matrix& t, const Matrix& p) {
  if (!t.is_square() || t.rows() != p.rows() || !p.is_square())
    throw DimensionError("compression: T and P must be square of the same size");
  if (!p.is_idempotent()) throw std::invalid_argument("compression: P is not idempotent");
  Subspace range = image_basis(p);
  Matrix pt = mat_mul(p, t);
  const std::size_t r = range.dim();
  Matrix out(r, r);
  for (std::size_t j = 0; j < r; ++j) {
    Vector image = mat_vec(pt, range.basis().row(j));
    Vector coords = range.coordinates(image);
    for (std::size_t i = 0; i < r; ++i) out(i, j) = coords[i];
  }
  return out;
}

PtpBlockForm ptp_block_form(const Matrix& t, const Matrix& p) {
  if (!t.is_square() || t.rows() != p.rows() || !p.is_square())
    throw DimensionError("block form: T and P must be square of the same size");
  if (!p.is_idempotent()) throw std::invalid_argument("block form: P is not idempotent");
  if (!(mat_mul(t, p) == mat_mul(p, t))) throw std::invalid_argument("block form: TP != PT");
  const std::size_t n = t.rows();
  Subspace range = image_basis(p);
  Subspace null = kernel_basis(p);
  Matrix basis(n, n);
  basis.set_block(0, 0, range.basis().transpose());
  basis.set_block(0, range.dim(), null.basis().transpose());

  PtpBlockForm out;
  out.range_dim = range.dim();
  out.basis_change = basis;
  out.block_form = mat_mul(inverse(basis), mat_mul(mat_mul(p, mat_mul(t, p)), basis));
  Matrix expected = block_diagonal(compression(t, p), Matrix::zero(null.dim(), null.dim()));
  if (!(out.block_form == expected)) throw std::logic_error("block form: conjugation identity failed");
  return out;
}

Matrix direct_sum(const Matrix& t1, const Matrix& t2) {
  if (!t1.is_square() || !t2.is_square()) throw DimensionError("direct sum needs square blocks");
  return block_diagonal(t1, t2);
}

}  // namespace ascdesc
