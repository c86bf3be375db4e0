#include "doctest.h"

#include "ascdesc/chain.hpp"
#include "ascdesc/generators.hpp"
#include "oracle.hpp"

using namespace ascdesc;

TEST_CASE("chain reports of small fixtures") {
  const ChainReport j3 = chain_report(Matrix::jordan_block(3));
  CHECK(j3.kernel_dims == std::vector<std::size_t>{0, 1, 2, 3, 3});
  CHECK(j3.range_dims == std::vector<std::size_t>{3, 2, 1, 0, 0});
  CHECK(j3.asc == 3);
  CHECK(j3.dsc == 3);
  CHECK(j3.alpha == 1);
  CHECK(j3.beta == 1);

  const ChainReport id = chain_report(Matrix::identity(4));
  CHECK(id.asc == 0);
  CHECK(id.dsc == 0);
  CHECK(id.alpha == 0);
  CHECK(id.beta == 0);

  const ChainReport d = chain_report(Matrix::diagonal({0, 1}));
  CHECK(d.asc == 1);
  CHECK(d.dsc == 1);
  CHECK(d.alpha == 1);
  CHECK(d.beta == 1);
}

TEST_CASE("chain invariants and the rank oracle agree on seeded matrices") {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const Matrix t = random_corpus_matrix(seed, 6);
    const ChainReport r = chain_report(t);
    const auto o = oracle::chains(t);
    CHECK(r.asc == o.asc);
    CHECK(r.dsc == o.dsc);
    CHECK(r.asc == r.dsc);
    CHECK(r.asc <= t.rows());
    for (std::size_t k = 0; k < r.kernel_dims.size(); ++k) {
      CHECK(r.kernel_dims[k] + r.range_dims[k] == t.rows());
      if (k > 0) {
        CHECK(r.kernel_dims[k] >= r.kernel_dims[k - 1]);
        CHECK(r.range_dims[k] <= r.range_dims[k - 1]);
      }
    }
  }
}

TEST_CASE("similarity invariance of the chain indices") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Rng rng(seed);
    const Matrix t = random_corpus_matrix(seed, 5);
    const SimilarPair v = random_similarity(rng, t.rows());
    const ChainReport a = chain_report(t), b = chain_report(mat_mul(mat_mul(v.v, t), v.v_inv));
    CHECK(a.asc == b.asc);
    CHECK(a.dsc == b.dsc);
    CHECK(a.alpha == b.alpha);
    CHECK(a.beta == b.beta);
  }
}

TEST_CASE("ascent characterization by intersections") {
  const Matrix j2 = Matrix::jordan_block(2);
  const AscPredicate m1 = prop_asc_predicate(j2, 1);
  CHECK_FALSE(m1.holds);
  REQUIRE(m1.witness);
  CHECK(Subspace::span_of(std::span(&*m1.witness, 1), 2) == Subspace::span_of_rows(Matrix{{1, 0}}));
  CHECK(prop_asc_predicate(j2, 2).holds);
  CHECK(prop_asc_predicate(Matrix::identity(3), 0).holds);
}

TEST_CASE("descent characterization by complements") {
  const Matrix j2 = Matrix::jordan_block(2);
  const DscPredicate m2 = prop_dsc_predicate(j2, 2);
  CHECK(m2.holds);
  CHECK(m2.witnesses.size() == 3);

  const DscPredicate m1 = prop_dsc_predicate(j2, 1);
  CHECK_FALSE(m1.holds);
  // N(T) + R(T^n) = span{e1} for n >= 1.
  CHECK(m1.failing_n == std::vector<std::size_t>{1, 2});

  const DscPredicate id = prop_dsc_predicate(Matrix::identity(2), 0);
  CHECK(id.holds);
  for (const auto& y : id.witnesses) CHECK(y.is_zero());
}

TEST_CASE("both characterizations match the indices for every m") {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const Matrix t = random_corpus_matrix(seed, 5);
    const ChainReport r = chain_report(t);
    for (std::size_t m = 0; m <= t.rows(); ++m) {
      CHECK(prop_asc_predicate(t, m).holds == (r.asc <= m));
      const DscPredicate d = prop_dsc_predicate(t, m);
      CHECK(d.holds == (r.dsc <= m));
      Matrix power = Matrix::identity(t.rows());
      for (std::size_t n = 0; n < d.witnesses.size(); ++n) {
        if (n > 0) power = mat_mul(power, t);
        CHECK(is_complement(d.witnesses[n], image_basis(power)));
      }
    }
  }
}

TEST_CASE("compression and the block form") {
  const Matrix t = Matrix::diagonal({1, 2});
  CHECK(compression(t, Matrix::identity(2)) == t);
  CHECK(compression(t, Matrix::diagonal({1, 0})) == Matrix{{1}});
  CHECK(compression(direct_sum(Matrix::jordan_block(2), Matrix::identity(1)), Matrix::diagonal({1, 1, 0})) ==
        Matrix::jordan_block(2));
  CHECK_THROWS_AS(compression(t, mat_scale(Matrix{{1, 1}, {0, 0}}, Scalar(2))), std::invalid_argument);

  const PtpBlockForm full = ptp_block_form(t, Matrix::identity(2));
  CHECK(full.block_form == t);
  CHECK(ptp_block_form(t, Matrix::zero(2, 2)).block_form.is_zero());
  const PtpBlockForm part = ptp_block_form(Matrix::diagonal({1, 2, 3}), Matrix::diagonal({1, 1, 0}));
  CHECK(part.block_form == Matrix::diagonal({1, 2, 0}));
  CHECK(part.range_dim == 2);
  CHECK_THROWS_AS(ptp_block_form(Matrix::jordan_block(2), Matrix::diagonal({1, 0})), std::invalid_argument);
}

TEST_CASE("direct sums take the larger index") {
  CHECK(chain_report(direct_sum(Matrix::jordan_block(2), Matrix::identity(1))).asc == 2);
  CHECK(chain_report(direct_sum(Matrix::jordan_block(2), Matrix::identity(1))).dsc == 2);
  CHECK(chain_report(direct_sum(Matrix::identity(2), Matrix::identity(2))).asc == 0);
  CHECK(chain_report(direct_sum(Matrix::jordan_block(2), Matrix::jordan_block(3))).asc == 3);
}
