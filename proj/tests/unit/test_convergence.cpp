#include "doctest.h"

#include <cmath>

#include "ascdesc/convergence.hpp"
#include "ascdesc/io.hpp"

using namespace ascdesc;
using namespace ascdesc::conv;
using harness::Outcome;

namespace {

SequenceSpec scaled(Matrix base, Matrix e, std::size_t n_end = 100, double exponent = 1.0) {
  SequenceSpec s;
  s.base = std::move(base);
  s.perturbation.e = std::move(e);
  s.perturbation.exponent = exponent;
  s.n_end = n_end;
  return s;
}

const harness::Check* find_check(const ProbeVerdict& v, const std::string& prefix) {
  for (const auto& c : v.checks)
    if (c.claim.rfind(prefix, 0) == 0) return &c;
  return nullptr;
}

}  // namespace

TEST_CASE("sequence validation") {
  CHECK_THROWS_AS(scaled(Matrix(2, 3), Matrix(2, 3)).validate(), DimensionError);
  CHECK_THROWS_AS(scaled(Matrix::identity(2), Matrix::identity(3)).validate(), std::invalid_argument);
  CHECK_THROWS_AS(scaled(Matrix::identity(2), Matrix::identity(2), 0).validate(), std::invalid_argument);
  CHECK_THROWS_AS(scaled(Matrix::identity(2), Matrix::identity(2), 10, 0.0).validate(), std::invalid_argument);
  SequenceSpec s = scaled(Matrix::identity(2), Matrix::identity(2), 10);
  s.stride = 3;
  CHECK(s.samples() == std::vector<std::size_t>{1, 4, 7, 10});
}

TEST_CASE("a kernel that disappears keeps the lower gap at one") {
  const GapTrajectory t = trajectory(scaled(Matrix::diagonal({1, 0}), Matrix::diagonal({0, 1})), {});
  CHECK(t.limit_rank == 1);
  REQUIRE(t.samples.size() == 100);
  for (const auto& s : t.samples) {
    CHECK(s.dkl == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(s.dku == 0.0);
    CHECK(s.rank_jump);
  }
  CHECK(classify_convergence(t, Side::lower, Object::kernel, {}) == ConvergenceClass::not_converged);
  CHECK(classify_convergence(t, Side::upper, Object::kernel, {}) == ConvergenceClass::converged);
}

TEST_CASE("constant sequences have zero gaps and limsup gamma of the operator") {
  const GapTrajectory t = trajectory(scaled(Matrix::identity(3), Matrix::zero(3, 3), 20), {});
  for (const auto& s : t.samples) {
    CHECK(s.dku == 0.0);
    CHECK(s.drl == 0.0);
  }
  CHECK(limsup_gamma(t, {}) == doctest::Approx(1.0));
  CHECK_THROWS_AS(classify_convergence(t, Side::upper, Object::range, num::Tolerance{1e-9, 1e-6, 50}),
                  std::invalid_argument);
}

TEST_CASE("shifted sequences") {
  // T_n = I + I/n - (1 + 1/n) I = 0 for every n.
  LambdaData l{1, 1, 1};
  CHECK(l.exact_at(4) == Scalar::parse("5/4"));
  CHECK(std::abs(l.at(4) - std::complex<double>(1.25, 0)) < 1e-15);
  const GapTrajectory t = trajectory(scaled(Matrix::identity(2), Matrix::identity(2), 30), {}, l);
  CHECK(t.limit_rank == 0);
  for (const auto& s : t.samples) CHECK(s.rank == 0);
}

TEST_CASE("probe names") {
  for (ProbeId p : {ProbeId::lem1, ProbeId::lem2, ProbeId::lem3, ProbeId::lem4, ProbeId::T1, ProbeId::lemma5})
    CHECK(parse_probe(to_string(p)) == p);
  CHECK_THROWS_AS(parse_probe("lem9"), std::invalid_argument);
}

TEST_CASE("a scaled nilpotent sequence keeps its chains") {
  const SequenceSpec s = scaled(Matrix::jordan_block(2), Matrix::jordan_block(2));
  const ProbeVerdict v = probe(s, ProbeId::lem1, {}, {});
  CHECK(v.mode == "machinery");
  CHECK(v.hypotheses["gamma_positive"] == true);
  CHECK(v.outcome == Outcome::pass);
  CHECK(probe(s, ProbeId::T1, {}, {}).outcome == Outcome::pass);
}

TEST_CASE("a perturbation that destroys the kernel breaks the forward direction") {
  const SequenceSpec s = scaled(Matrix::jordan_block(2), Matrix::identity(2));
  const ProbeVerdict t1 = probe(s, ProbeId::T1, {}, {});
  CHECK(t1.outcome == Outcome::fail);
  const harness::Check* meet = find_check(t1, "R(A^d) ∩ N(A)");
  REQUIRE(meet);
  CHECK(meet->holds == Truth::no);

  const ProbeVerdict l5 = probe(s, ProbeId::lemma5, {}, {});
  CHECK(l5.outcome == Outcome::fail);
  for (const auto& d : l5.witness["tail_dkl"]) CHECK(std::abs(io::float_from_json(d) - 1.0) <= 1e-12);

  // γ(T_n) ~ 1/n^2 decays, so the lemma needing limsup γ > 0 is gated.
  const ProbeVerdict l1 = probe(s, ProbeId::lem1, {}, {});
  CHECK(l1.hypotheses["gamma_positive"] == false);
  CHECK(l1.outcome != Outcome::pass);
}

TEST_CASE("tower sequences are probed literally") {
  TowerSequenceSpec s;
  s.base = tower::OperatorSpec::backward_shift();
  s.perturbation = tower::OperatorSpec(tower::FiniteRank{{tower::FiniteRankTerm{{1}, {1}}}});
  s.n_end = 10;
  const ProbeVerdict v = probe(s, ProbeId::lem2, {}, {}, tower::WindowConfig{});
  CHECK(v.mode == "literal");
  CHECK(v.outcome == Outcome::pass);
  CHECK(probe(s, ProbeId::lemma5, {}, {}, tower::WindowConfig{}).outcome == Outcome::inconclusive);
}
