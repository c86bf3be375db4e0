#include "doctest.h"

#include "ascdesc/chain.hpp"
#include "ascdesc/generators.hpp"
#include "ascdesc/hypothesis.hpp"

using namespace ascdesc;

namespace {

const Matrix kT = direct_sum(Matrix::jordan_block(2), Matrix::identity(2));
const Matrix kS = direct_sum(Matrix::identity(2), Matrix::jordan_block(2));

}  // namespace

TEST_CASE("kernel decomposition hypothesis") {
  const H1Report blocks = check_h1(kS, kT);
  CHECK(blocks.commute);
  CHECK(blocks.holds);

  const Matrix j2 = Matrix::jordan_block(2);
  const H1Report same = check_h1(j2, j2);
  CHECK(same.commute);
  CHECK_FALSE(same.holds);
  CHECK(same.failing_p == 1u);
  REQUIRE(same.kernel_t);
  CHECK(*same.kernel_t == *same.kernel_s);

  CHECK(check_h1(Matrix::identity(3), Matrix::jordan_block(3)).holds);

  const H1Report noncommuting = check_h1(Matrix::jordan_block(2), Matrix::jordan_block(2).transpose());
  CHECK_FALSE(noncommuting.commute);
  CHECK_FALSE(noncommuting.holds);

  CHECK_THROWS_AS(check_h1(Matrix::identity(2), Matrix::identity(3)), DimensionError);
}

TEST_CASE("range inclusion hypothesis") {
  const H2Report ids = check_h2(Matrix::identity(2), Matrix::identity(2));
  CHECK(ids.holds);
  CHECK(ids.n0 == 0);

  const H2Report blocks = check_h2(kS, kT);
  CHECK(blocks.n0 == 2);
  // N(S^2) = 0 ⊕ C^2 lies in R(T) = 0 ⊕ C^2 after T's block is killed? R(T) = span{e1} ⊕ C^2.
  CHECK(blocks.kernel_s_in_range_t);
  CHECK(blocks.kernel_t_in_range_s);
  CHECK(blocks.holds);

  Rng rng(4);
  const Matrix inv = random_invertible_triangular(rng, 3);
  const H2Report t_invertible = check_h2(Matrix::jordan_block(3), inv);
  CHECK(t_invertible.kernel_t_in_range_s);
  CHECK(t_invertible.holds);
}

TEST_CASE("exception sets") {
  const Matrix j2 = Matrix::jordan_block(2);
  CHECK(in_r_set(j2, j2, 0).member);
  CHECK_FALSE(in_m_set(j2, j2, 0).member);
  CHECK_FALSE(in_m_set(j2, j2, 0).certificate.empty());
  CHECK_FALSE(in_n_set(kS, kT, 0).member);
  CHECK_FALSE(in_r_set(kS, kT, 0).member);
}

TEST_CASE("seeded h1 families satisfy the hypothesis by construction") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const H1Family f = random_h1_family(seed, 1 + seed % 3, 1 + (seed / 3) % 3);
    CHECK(commutes(f.s, f.t));
    CHECK(check_h1(f.s, f.t).holds);
    const std::size_t asc_ts = chain_report(mat_mul(f.t, f.s)).asc;
    CHECK(asc_ts == std::max(chain_report(f.a).asc, chain_report(f.b).asc));
  }
}

TEST_CASE("seeded commuting pairs commute") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const CommutingPair p = random_commuting_pair(seed, 1 + seed % 4, 1 + seed % 2);
    CHECK(commutes(p.s, p.t));
  }
  CHECK_THROWS_AS(random_commuting_pair(0, 3, 0), std::invalid_argument);
}
