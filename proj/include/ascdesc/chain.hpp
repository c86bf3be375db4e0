#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ascdesc/matrix.hpp"
#include "ascdesc/subspace.hpp"

namespace ascdesc {

/**
 * Kernel and range chains of one square matrix T.
 *
 * kernel_dims[k] = dim N(T^k), range_dims[k] = dim R(T^k) for k = 0..stop,
 * where stop = max(asc, dsc) + 1 is the first index at which both chains
 * have repeated. In finite dimension the chains always stabilize by
 * k = ambient_dim, so alpha and beta are plain counts here.
 */
struct ChainReport {
  std::size_t ambient_dim = 0;
  std::vector<std::size_t> kernel_dims;
  std::vector<std::size_t> range_dims;
  std::size_t asc = 0;
  std::size_t dsc = 0;
  std::size_t alpha = 0;
  std::size_t beta = 0;

  friend bool operator==(const ChainReport&, const ChainReport&) = default;
};

/// Both chains are computed independently: kernels by row elimination of
/// T^k, ranges by column elimination.
ChainReport chain_report(const Matrix& t);

struct AscPredicate {
  bool holds = false;
  /// Nonzero vector of R(T^m) ∩ N(T^d) when the predicate fails.
  std::optional<Vector> witness;
};

/// R(T^m) ∩ N(T^d) = {0} with d = dim X (the kernel chain is constant from d on).
AscPredicate prop_asc_predicate(const Matrix& t, std::size_t m);

struct DscPredicate {
  bool holds = false;
  /// Y_n for n = 0..dim X (only filled when the predicate holds).
  std::vector<Subspace> witnesses;
  /// Every n <= dim X at which N(T^m) + R(T^n) != X.
  std::vector<std::size_t> failing_n;
};

/// For each n <= dim X, N(T^m) + R(T^n) = X; Y_n is a complement of
/// N(T^m) ∩ R(T^n) inside N(T^m).
DscPredicate prop_dsc_predicate(const Matrix& t, std::size_t m);

/// True iff X = y ⊕ r (both in the same ambient space).
bool is_complement(const Subspace& y, const Subspace& r);

/// Matrix of T_P : R(P) -> R(P), y ↦ PTy, in the canonical basis of R(P).
/// Throws std::invalid_argument if P is not idempotent.
Matrix compression(const Matrix& t, const Matrix& p);

struct PtpBlockForm {
  /// B^{-1} (PTP) B = diag(T_P, 0).
  Matrix block_form;
  /// Columns: canonical basis of R(P), then of N(P).
  Matrix basis_change;
  std::size_t range_dim = 0;
};

/// Requires P^2 = P and TP = PT; throws std::invalid_argument otherwise.
/// The returned block form is checked against diag(compression(T,P), 0).
PtpBlockForm ptp_block_form(const Matrix& t, const Matrix& p);

/// T1 ⊕ T2.
Matrix direct_sum(const Matrix& t1, const Matrix& t2);

}  // namespace ascdesc
