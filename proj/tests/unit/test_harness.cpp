#include "doctest.h"

#include "ascdesc/harness.hpp"

using namespace ascdesc;
using namespace ascdesc::harness;

TEST_CASE("theorem names round trip") {
  for (TheoremId id : all_theorems()) CHECK(parse_theorem(to_string(id)) == id);
  CHECK(all_theorems().size() == 12);
  CHECK_THROWS_AS(parse_theorem("thm99"), std::invalid_argument);
}

TEST_CASE("three-valued decision") {
  std::string reason;
  CHECK(decide({{"a", "literal", Truth::yes, {}}}, reason) == Outcome::pass);
  CHECK(decide({{"a", "literal", Truth::yes, {}}, {"b", "literal", Truth::unknown, {}}}, reason) ==
        Outcome::inconclusive);
  CHECK(decide({{"a", "literal", Truth::unknown, {}}, {"b", "literal", Truth::no, {}}}, reason) == Outcome::fail);
  CHECK(reason.find('b') != std::string::npos);
}

TEST_CASE("product ascent for block pairs") {
  const Matrix j2 = Matrix::jordan_block(2), i2 = Matrix::identity(2);
  const PairInstance in{direct_sum(i2, j2), direct_sum(j2, i2), "fixture"};
  const TheoremVerdict v = verify(TheoremId::theo34, in, 0);
  CHECK(v.outcome == Outcome::pass);
  CHECK(v.witness["asc_TS"] == 2);
}

TEST_CASE("unmet hypotheses give inconclusive, never fail") {
  const Matrix j2 = Matrix::jordan_block(2);
  const TheoremVerdict same = verify(TheoremId::theo34, PairInstance{j2, j2, "fixture"}, 0);
  CHECK(same.outcome == Outcome::inconclusive);
  CHECK(same.reason.find("hypothesis not met") == 0);

  const TheoremVerdict noncommuting = verify(TheoremId::lemma35, PairInstance{j2, j2.transpose(), "fixture"}, 0);
  CHECK(noncommuting.outcome == Outcome::inconclusive);

  const TheoremVerdict singular = verify(TheoremId::eq_mul, ProductInstance{j2, Matrix::identity(2)}, 0);
  CHECK(singular.outcome == Outcome::inconclusive);
}

TEST_CASE("direct sum instances and block matrices") {
  const DirectSumInstance ds{Matrix::jordan_block(2), Matrix::identity(1), Matrix::identity(3)};
  const TheoremVerdict v = verify(TheoremId::lemma41, ds, 0);
  CHECK(v.outcome == Outcome::pass);
  CHECK(v.witness["asc_T"] == 2);

  const BlockMatrixInstance blocks{Matrix::jordan_block(2), Matrix::diagonal({1}), Matrix{{1}, {0}}, {2}};
  CHECK(verify(TheoremId::app_blocks, blocks, 0).outcome == Outcome::pass);
}

TEST_CASE("mismatched instance shapes are rejected") {
  CHECK_THROWS_AS(verify(TheoremId::prop11, ProductInstance{Matrix::identity(1), Matrix::identity(1)}, 0),
                  std::invalid_argument);
}

TEST_CASE("seeded verification never fails") {
  for (TheoremId id : all_theorems()) {
    const auto verdicts = verify_batch(id, 3, 6, 1);
    REQUIRE(verdicts.size() == 6);
    for (std::size_t k = 0; k < verdicts.size(); ++k) CHECK(verdicts[k].seed == 3 + k);
    CHECK(summarize(verdicts).fail == 0);
  }
}

TEST_CASE("batches do not depend on the worker count") {
  for (TheoremId id : {TheoremId::prop11, TheoremId::thC, TheoremId::nov}) {
    Json a = Json::array(), b = Json::array();
    for (const auto& v : verify_batch(id, 20, 8, 1)) a.push_back(to_json(v));
    for (const auto& v : verify_batch(id, 20, 8, 4)) b.push_back(to_json(v));
    CHECK(a.dump() == b.dump());
  }
}
