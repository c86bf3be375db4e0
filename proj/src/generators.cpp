#include "ascdesc/generators.hpp"

#include <stdexcept>

namespace ascdesc {

long Rng::uniform(long lo, long hi) {
  std::uniform_int_distribution<long> dist(lo, hi);
  return dist(engine_);
}

Scalar Rng::gaussian_integer(long re_bound, long im_bound) {
  const long re = uniform(-re_bound, re_bound);
  const long im = uniform(-im_bound, im_bound);
  return {mpq_class(re), mpq_class(im)};
}

Scalar Rng::nonzero_gaussian_integer(long re_bound, long im_bound) {
  for (;;) {
    Scalar z = gaussian_integer(re_bound, im_bound);
    if (!z.is_zero()) return z;
  }
}

Matrix random_entry_matrix(Rng& rng, std::size_t n) {
  Matrix m(n, n);
  // Sparse-ish draws keep small eigen-structure (repeated eigenvalues, nilpotent parts) common.
  const long zero_bias = rng.uniform(0, 3);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (rng.uniform(0, 3) >= zero_bias) m(i, j) = rng.gaussian_integer(2, 1);
  return m;
}

Matrix random_corpus_matrix(std::uint64_t seed, std::size_t max_dim) {
  Rng rng(seed);
  const auto n = static_cast<std::size_t>(rng.uniform(1, static_cast<long>(max_dim)));
  Matrix m = random_entry_matrix(rng, n);
  // Fully random matrices are almost always invertible. Two thirds of the
  // corpus is made triangular, with a diagonal drawn from {0, 1} or zeroed
  // outright, so that repeated eigenvalues and long chains actually occur.
  // Entries stay inside the same small set either way.
  const long mode = rng.uniform(0, 2);
  if (mode == 0) return m;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) m(i, j) = Scalar{};
    m(i, i) = mode == 1 ? Scalar(rng.uniform(0, 1)) : Scalar{};
  }
  return m;
}

Matrix random_nilpotent(Rng& rng, std::size_t n) {
  std::vector<Matrix> blocks;
  std::size_t left = n;
  while (left > 0) {
    const auto k = static_cast<std::size_t>(rng.uniform(1, static_cast<long>(left)));
    blocks.push_back(Matrix::jordan_block(k));
    left -= k;
  }
  return blocks.empty() ? Matrix(0, 0) : block_diagonal(blocks);
}

Matrix random_invertible_triangular(Rng& rng, std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = rng.nonzero_gaussian_integer(2, 1);
    for (std::size_t j = i + 1; j < n; ++j) m(i, j) = rng.gaussian_integer(1, 1);
  }
  return m;
}

Matrix random_unimodular(Rng& rng, std::size_t n) {
  Matrix l = Matrix::identity(n), u = Matrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      l(i, j) = rng.uniform(-1, 1);
      u(j, i) = rng.uniform(-1, 1);
    }
  return mat_mul(l, u);
}

SimilarPair random_similarity(Rng& rng, std::size_t n) {
  Matrix v = random_unimodular(rng, n);
  Matrix v_inv = inverse(v);
  return {std::move(v), std::move(v_inv)};
}

Matrix random_nil_plus_invertible(Rng& rng, std::size_t n, std::size_t nil) {
  if (nil > n) throw std::invalid_argument("nilpotent part larger than the matrix");
  Matrix core = block_diagonal(random_nilpotent(rng, nil), random_invertible_triangular(rng, n - nil));
  SimilarPair sim = random_similarity(rng, n);
  return mat_mul(mat_mul(sim.v, core), sim.v_inv);
}

H1Family random_h1_family(std::uint64_t seed, std::size_t d1, std::size_t d2) {
  Rng rng(seed);
  H1Family out;
  out.a = random_nil_plus_invertible(rng, d1, static_cast<std::size_t>(rng.uniform(0, static_cast<long>(d1))));
  out.b = random_nil_plus_invertible(rng, d2, static_cast<std::size_t>(rng.uniform(0, static_cast<long>(d2))));
  out.t = block_diagonal(out.a, Matrix::identity(d2));
  out.s = block_diagonal(Matrix::identity(d1), out.b);
  return out;
}

Polynomial random_polynomial(Rng& rng, std::size_t degree) {
  std::vector<Scalar> coeffs;
  for (std::size_t k = 0; k < degree; ++k) coeffs.push_back(rng.gaussian_integer(2, 1));
  coeffs.push_back(rng.nonzero_gaussian_integer(2, 1));
  return Polynomial(std::move(coeffs));
}

CommutingPair random_commuting_pair(std::uint64_t seed, std::size_t dim, std::size_t degree) {
  if (degree < 1) throw std::invalid_argument("commuting pair needs polynomial degree >= 1");
  Rng rng(seed);
  CommutingPair out;
  const auto nil = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(dim)));
  out.a = random_nil_plus_invertible(rng, dim, nil);
  out.p = random_polynomial(rng, degree);
  out.q = random_polynomial(rng, degree);
  // Dropping the constant term now and then makes p(A), q(A) singular.
  if (rng.coin()) out.p = out.p - Polynomial::constant(out.p.coeffs().front());
  if (rng.coin()) out.q = out.q - Polynomial::constant(out.q.coeffs().front());
  out.s = evaluate(out.p, out.a);
  out.t = evaluate(out.q, out.a);
  return out;
}

}  // namespace ascdesc
