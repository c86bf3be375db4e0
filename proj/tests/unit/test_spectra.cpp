#include "doctest.h"

#include "ascdesc/generators.hpp"
#include "ascdesc/spectra.hpp"

using namespace ascdesc;

TEST_CASE("eigenvalues in the Gaussian rationals") {
  const Eigenvalues d = eigenvalues_exact(Matrix::diagonal({1, 2, 2}));
  CHECK(d.values == std::vector<Scalar>{1, 2});
  CHECK(d.multiplicities == std::vector<std::size_t>{1, 2});
  CHECK(d.complete());

  const Eigenvalues rot = eigenvalues_exact(Matrix{{0, -1}, {1, 0}});
  REQUIRE(rot.values.size() == 2);
  CHECK(rot.complete());
  for (const auto& z : rot.values) CHECK(z * z == Scalar(-1));

  const Eigenvalues sqrt2 = eigenvalues_exact(Matrix{{0, 2}, {1, 0}});
  CHECK(sqrt2.values.empty());
  CHECK(sqrt2.residual_degree == 2);

  const Eigenvalues half = eigenvalues_exact(Matrix{{Scalar::parse("1/2+1/3i"), 5}, {0, Scalar::parse("-7/4")}});
  CHECK(half.values.size() == 2);
  CHECK(half.complete());
}

TEST_CASE("eigenvalues of seeded triangular matrices are complete and exact") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Rng rng(seed);
    const Matrix t = random_invertible_triangular(rng, static_cast<std::size_t>(rng.uniform(1, 6)));
    const Eigenvalues e = eigenvalues_exact(t);
    CHECK(e.complete());
    for (const auto& z : e.values) CHECK(rank(scalar_shift(t, z)) < t.rows());
  }
}

TEST_CASE("point profiles") {
  const Matrix j2 = Matrix::jordan_block(2);
  CHECK(point_profile(j2, 0) == PointProfile{2, 2, 1, 1});
  CHECK(point_profile(j2, 1) == PointProfile{0, 0, 0, 0});
  CHECK(point_profile(Matrix::diagonal({1, 2}), 1) == PointProfile{1, 1, 1, 1});
}

TEST_CASE("dense spectra are empty and carry the certificate") {
  const SpectrumProfile j3 = ascent_spectrum(Matrix::jordan_block(3));
  CHECK(j3.sigma_asc.empty());
  CHECK(j3.sigma_dsc.empty());
  CHECK(j3.certificate == kFiniteDimCertificate);
  REQUIRE(j3.points.size() == 1);
  CHECK(j3.points[0].lambda == Scalar(0));
  CHECK(j3.points[0].profile.asc == 3);

  const SpectrumProfile d = descent_spectrum(Matrix::diagonal({1, 2}));
  CHECK(d.sigma_dsc.empty());
  REQUIRE(d.points.size() == 2);
  for (const auto& p : d.points) CHECK(p.profile.asc == 1);

  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Rng rng(seed);
    const SpectrumProfile p = ascent_spectrum(random_entry_matrix(rng, 5));
    CHECK(p.sigma_asc.empty());
    CHECK(p.max_index <= 5);
  }
}

TEST_CASE("positive ascent exactly at eigenvalues") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Matrix t = random_corpus_matrix(seed, 5);
    const Eigenvalues e = eigenvalues_exact(t);
    for (const auto& z : e.values) CHECK(point_profile(t, z).asc > 0);
    for (long c = -2; c <= 2; ++c) CHECK((point_profile(t, c).asc > 0) == (rank(scalar_shift(t, c)) < t.rows()));
  }
}

TEST_CASE("polynomial spectral mapping") {
  CHECK(poly_spectral_map_check(Matrix::diagonal({1, 2}), Polynomial({0, 0, 1})) == Truth::yes);
  CHECK(poly_spectral_map_check(Matrix::jordan_block(3), Polynomial::constant(5)) == Truth::yes);
  CHECK(poly_spectral_map_check(Matrix::jordan_block(2), Polynomial({3, 1})) == Truth::yes);
  CHECK(poly_spectral_map_check(Matrix{{0, 2}, {1, 0}}, Polynomial({0, 1})) == Truth::unknown);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Rng rng(seed);
    const Matrix t = random_invertible_triangular(rng, 4);
    CHECK(poly_spectral_map_check(t, random_polynomial(rng, 2)) == Truth::yes);
  }
}
