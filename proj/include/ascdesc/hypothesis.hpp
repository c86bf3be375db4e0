#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "ascdesc/matrix.hpp"
#include "ascdesc/subspace.hpp"
#include "ascdesc/tower.hpp"

namespace ascdesc {

bool commutes(const Matrix& s, const Matrix& t);

/// ST = TS and N((TS)^p) = N(T^p) ⊕ N(S^p) for every p >= 1.
struct H1Report {
  bool commute = false;
  bool holds = false;
  /// First p at which the kernel identity fails, with the three kernels there.
  std::optional<std::size_t> failing_p;
  std::optional<Subspace> kernel_t;
  std::optional<Subspace> kernel_s;
  std::optional<Subspace> kernel_ts;
  /// Largest p examined; the identity is constant once all three kernel chains have stabilized.
  std::size_t checked_up_to = 0;
};

/// n0 = dsc(ST) and N(S^n0) ⊆ R(T) or N(T^n0) ⊆ R(S).
struct H2Report {
  bool holds = false;
  std::size_t n0 = 0;
  bool kernel_s_in_range_t = false;
  bool kernel_t_in_range_s = false;
};

struct HypothesisReport {
  bool commute = false;
  H1Report h1;
  H2Report h2;
  /// Whether some power of ST has finite rank; always certain for matrices.
  tower::Certainty f_tilde = tower::Certainty::certain_true;
};

/// Throws DimensionError unless S and T are square of the same size.
H1Report check_h1(const Matrix& s, const Matrix& t);
H2Report check_h2(const Matrix& s, const Matrix& t);
HypothesisReport check_hypotheses(const Matrix& s, const Matrix& t);

struct SetMembership {
  bool member = false;
  std::string certificate;
};

/// λ ∈ ℛ: if S+T-λ has finite ascent then (S-λ, T-λ) fails (H1).
SetMembership in_r_set(const Matrix& s, const Matrix& t, const Scalar& lambda);
/// λ ∈ ℳ: if dsc((S-λ)(T-λ)) = n0 then codim R((S-λ)^n0) or codim R((T-λ)^n0) is infinite.
/// Codimensions of matrices are finite, so this is always false.
SetMembership in_m_set(const Matrix& s, const Matrix& t, const Scalar& lambda);
/// λ ∈ 𝒩: if S+T-λ has finite descent then (S-λ, T-λ) fails (H1) or (H2).
SetMembership in_n_set(const Matrix& s, const Matrix& t, const Scalar& lambda);

}  // namespace ascdesc
