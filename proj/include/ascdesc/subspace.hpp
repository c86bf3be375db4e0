#pragma once

#include <cstddef>
#include <span>

#include "ascdesc/matrix.hpp"

namespace ascdesc {

/**
 * A linear subspace of Q(i)^n held as the nonzero rows of a reduced
 * row-echelon basis. The RREF basis is unique, so set equality is
 * plain entry-wise equality of the stored bases.
 */
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(std::size_t ambient_dim);
  static Subspace full(std::size_t ambient_dim);
  /// Span of the rows of `rows` (need not be independent).
  static Subspace span_of_rows(const Matrix& rows);
  static Subspace span_of(std::span<const Vector> vectors, std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_; }

  /// Rows form the canonical basis.
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  Vector basis_vector(std::size_t k) const;

  bool contains(std::span<const Scalar> v) const;
  bool is_subspace_of(const Subspace& other) const;

  /// Coordinates of `v` in the stored basis; `v` must lie in the subspace.
  Vector coordinates(std::span<const Scalar> v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  Subspace(std::size_t ambient, Matrix basis, std::vector<std::size_t> pivots)
      : ambient_(ambient), basis_(std::move(basis)), pivots_(std::move(pivots)) {}

  std::size_t ambient_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// N(A) = {x : Ax = 0}.
Subspace kernel_basis(const Matrix& a);
/// Column space of A.
Subspace image_basis(const Matrix& a);
Subspace subspace_sum(const Subspace& y, const Subspace& z);
/// Y ∩ Z as the common solution set of both subspaces' defining equations.
Subspace subspace_intersection(const Subspace& y, const Subspace& z);
/// True iff the parts intersect pairwise in {0} and dim(sum) = sum of dims.
bool is_direct_sum(std::span<const Subspace> parts);
inline std::size_t codim(const Subspace& y) { return y.ambient_dim() - y.dim(); }

/// Basis of a complement of `inner` inside `outer` (inner ⊆ outer required),
/// built by extending the basis of `inner` with basis vectors of `outer`.
Subspace complement_in(const Subspace& inner, const Subspace& outer);

}  // namespace ascdesc
