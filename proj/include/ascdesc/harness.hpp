#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "ascdesc/matrix.hpp"
#include "ascdesc/spectra.hpp"
#include "ascdesc/tower.hpp"

namespace ascdesc::harness {

using Json = nlohmann::ordered_json;

enum class TheoremId { prop11, th1, theo34, monn, thC, nov, lemma41, lemma_ca, lemma35, lemma36, eq_mul, app_blocks };

const char* to_string(TheoremId id);
/// Throws std::invalid_argument for unknown names.
TheoremId parse_theorem(const std::string& name);
const std::vector<TheoremId>& all_theorems();

enum class Outcome { pass, fail, inconclusive };
const char* to_string(Outcome o);

/// One claim evaluated on an instance. `kind` is "literal" for the statement
/// as written, "quantitative" for an index bound read off its proof.
struct Check {
  std::string claim;
  std::string kind;
  Truth holds = Truth::unknown;
  std::string detail;
};

/// fail if any check fails, inconclusive if any is undecided, pass otherwise.
/// `reason` names the deciding check.
Outcome decide(const std::vector<Check>& checks, std::string& reason);

struct TheoremVerdict {
  TheoremId theorem = TheoremId::prop11;
  std::uint64_t seed = 0;
  Outcome outcome = Outcome::inconclusive;
  std::string reason;
  Json instance;
  Json witness;
  std::vector<Check> checks;
};

/// Single matrix (prop11).
struct MatrixInstance {
  Matrix t;
};

/// Pair (S, T); `construction` names the generator that produced it.
struct PairInstance {
  Matrix s;
  Matrix t;
  std::string construction;
};

/// T = V (T1 ⊕ T2) V^{-1}; X1 = V(span of the first block) and X2 are T-invariant.
struct DirectSumInstance {
  Matrix t1;
  Matrix t2;
  Matrix v;
};

/// T with an idempotent P.
struct ProjectionInstance {
  Matrix t;
  Matrix p;
};

/// Product ab with a the candidate invertible factor.
struct ProductInstance {
  Matrix a;
  Matrix b;
};

/// M = T ⊕ S, M_C = [[T, C], [0, S]] and scale factors k.
struct BlockMatrixInstance {
  Matrix t;
  Matrix s;
  Matrix c;
  std::vector<long> ks;
};

/// Commuting operators on the truncation tower with an explicit product spec.
struct TowerPairInstance {
  tower::OperatorSpec s;
  tower::OperatorSpec t;
  tower::OperatorSpec product;
  std::vector<Scalar> candidates;
  tower::WindowConfig window;
};

using Instance = std::variant<MatrixInstance, PairInstance, DirectSumInstance, ProjectionInstance, ProductInstance,
                              BlockMatrixInstance, TowerPairInstance>;

/// Deterministic instance for a theorem from a seed.
Instance generate(TheoremId id, std::uint64_t seed);

/// Throws std::invalid_argument if the instance variant does not fit the theorem.
TheoremVerdict verify(TheoremId id, const Instance& instance, std::uint64_t seed);
TheoremVerdict verify_seed(TheoremId id, std::uint64_t seed);

/// Trials use seeds seed, seed+1, ...; results are returned sorted by seed
/// whatever order the workers finish in.
std::vector<TheoremVerdict> verify_batch(TheoremId id, std::uint64_t seed, std::size_t trials, std::size_t threads);

struct BatchSummary {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t inconclusive = 0;
};
BatchSummary summarize(const std::vector<TheoremVerdict>& verdicts);

Json to_json(const Check& c);
Json to_json(const TheoremVerdict& v);
Json instance_json(const Instance& instance);

}  // namespace ascdesc::harness
