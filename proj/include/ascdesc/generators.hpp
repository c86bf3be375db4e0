#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "ascdesc/matrix.hpp"
#include "ascdesc/polynomial.hpp"

namespace ascdesc {

/// Seeded source of small integers and Gaussian integers. Every generator
/// below draws only from this, so an instance is a pure function of its seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  long uniform(long lo, long hi);
  bool coin() { return uniform(0, 1) == 1; }
  /// re in [-re_bound, re_bound], im in [-im_bound, im_bound].
  Scalar gaussian_integer(long re_bound, long im_bound);
  Scalar nonzero_gaussian_integer(long re_bound, long im_bound);

 private:
  std::mt19937_64 engine_;
};

/// n x n with entries in {-2..2} + {-1,0,1}i.
Matrix random_entry_matrix(Rng& rng, std::size_t n);
/// Random dimension in [1, max_dim], then random_entry_matrix.
Matrix random_corpus_matrix(std::uint64_t seed, std::size_t max_dim = 8);

/// Direct sum of nilpotent Jordan blocks J_k(0) whose sizes partition n.
Matrix random_nilpotent(Rng& rng, std::size_t n);
/// Upper triangular with nonzero Gaussian-integer diagonal.
Matrix random_invertible_triangular(Rng& rng, std::size_t n);
/// L·U with unit-diagonal integer factors: determinant 1, integer inverse.
Matrix random_unimodular(Rng& rng, std::size_t n);
/// V (N ⊕ R) V^{-1}: nilpotent part of size `nil`, invertible part of size n - nil.
Matrix random_nil_plus_invertible(Rng& rng, std::size_t n, std::size_t nil);

struct SimilarPair {
  Matrix v;
  Matrix v_inv;
};
SimilarPair random_similarity(Rng& rng, std::size_t n);

struct H1Family {
  Matrix s;  // I_{d1} ⊕ B
  Matrix t;  // A ⊕ I_{d2}
  Matrix a;
  Matrix b;
};

/// Commuting pair whose kernels live in complementary blocks, so (H1) holds.
H1Family random_h1_family(std::uint64_t seed, std::size_t d1, std::size_t d2);

struct CommutingPair {
  Matrix s;  // p(A)
  Matrix t;  // q(A)
  Matrix a;
  Polynomial p;
  Polynomial q;
};

/// S = p(A), T = q(A) with random A and random polynomials of the given degree.
CommutingPair random_commuting_pair(std::uint64_t seed, std::size_t dim, std::size_t degree);

/// Random polynomial with small Gaussian-integer coefficients and nonzero leading term.
Polynomial random_polynomial(Rng& rng, std::size_t degree);

}  // namespace ascdesc
