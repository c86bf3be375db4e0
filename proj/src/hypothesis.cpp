#include "ascdesc/hypothesis.hpp"

#include "ascdesc/chain.hpp"

namespace ascdesc {

namespace {

void require_pair(const Matrix& s, const Matrix& t) {
  if (!s.is_square() || !t.is_square() || s.rows() != t.rows())
    throw DimensionError("hypothesis checks need two square matrices of the same size");
}

}  // namespace

bool commutes(const Matrix& s, const Matrix& t) {
  require_pair(s, t);
  return mat_mul(s, t) == mat_mul(t, s);
}

H1Report check_h1(const Matrix& s, const Matrix& t) {
  require_pair(s, t);
  H1Report out;
  out.commute = commutes(s, t);
  if (!out.commute) return out;

  const std::size_t n = s.rows();
  const Matrix ts = mat_mul(t, s);
  Matrix tp = Matrix::identity(n), sp = tp, tsp = tp;
  Subspace prev_t = Subspace::zero(n), prev_s = prev_t, prev_ts = prev_t;
  out.holds = true;
  for (std::size_t p = 1; p <= n; ++p) {
    tp = mat_mul(tp, t);
    sp = mat_mul(sp, s);
    tsp = mat_mul(tsp, ts);
    Subspace kt = kernel_basis(tp), ks = kernel_basis(sp), kts = kernel_basis(tsp);
    out.checked_up_to = p;
    const Subspace parts[] = {kt, ks};
    if (!is_direct_sum(parts) || !(subspace_sum(kt, ks) == kts)) {
      out.holds = false;
      out.failing_p = p;
      out.kernel_t = std::move(kt);
      out.kernel_s = std::move(ks);
      out.kernel_ts = std::move(kts);
      return out;
    }
    if (kt == prev_t && ks == prev_s && kts == prev_ts) break;
    prev_t = std::move(kt);
    prev_s = std::move(ks);
    prev_ts = std::move(kts);
  }
  return out;
}

H2Report check_h2(const Matrix& s, const Matrix& t) {
  require_pair(s, t);
  H2Report out;
  out.n0 = chain_report(mat_mul(s, t)).dsc;
  out.kernel_s_in_range_t = kernel_basis(mat_pow(s, out.n0)).is_subspace_of(image_basis(t));
  out.kernel_t_in_range_s = kernel_basis(mat_pow(t, out.n0)).is_subspace_of(image_basis(s));
  out.holds = out.kernel_s_in_range_t || out.kernel_t_in_range_s;
  return out;
}

HypothesisReport check_hypotheses(const Matrix& s, const Matrix& t) {
  HypothesisReport out;
  out.h1 = check_h1(s, t);
  out.commute = out.h1.commute;
  out.h2 = check_h2(s, t);
  return out;
}

SetMembership in_r_set(const Matrix& s, const Matrix& t, const Scalar& lambda) {
  require_pair(s, t);
  // S+T-λ always has finite ascent here, so the implication reduces to ¬(H1).
  H1Report h1 = check_h1(scalar_shift(s, lambda), scalar_shift(t, lambda));
  return {!h1.holds, h1.holds ? "H1 holds for the shifted pair" : "H1 fails for the shifted pair"};
}

SetMembership in_m_set(const Matrix& s, const Matrix& t, const Scalar&) {
  require_pair(s, t);
  return {false, "finite dimension: every range has finite codimension"};
}

SetMembership in_n_set(const Matrix& s, const Matrix& t, const Scalar& lambda) {
  require_pair(s, t);
  const Matrix sl = scalar_shift(s, lambda), tl = scalar_shift(t, lambda);
  H1Report h1 = check_h1(sl, tl);
  if (!h1.holds) return {true, "H1 fails for the shifted pair"};
  if (!check_h2(sl, tl).holds) return {true, "H2 fails for the shifted pair"};
  return {false, "H1 and H2 hold for the shifted pair"};
}

}  // namespace ascdesc
