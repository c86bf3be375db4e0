#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ascdesc/matrix.hpp"

namespace ascdesc::tower {

/// Scalar sequence: `pre` values first, then `period` repeated forever
/// (an empty period means zeros after the preperiod).
struct EventuallyPeriodic {
  std::vector<Scalar> pre;
  std::vector<Scalar> period;

  Scalar at(std::size_t k) const;
  bool vanishes() const;
};

class OperatorSpec;

struct Dense {
  Matrix matrix;
};

/// diagonals[o] holds entries (i, j) with j - i = o; the sequence is indexed
/// by min(i, j), the position along the diagonal.
struct Banded {
  std::map<long, EventuallyPeriodic> diagonals;
};

/// x ↦ Σ u <v, x> with finitely supported u, v (bilinear pairing).
struct FiniteRankTerm {
  Vector u;
  Vector v;
};

struct FiniteRank {
  std::vector<FiniteRankTerm> terms;
};

struct Sum {
  std::vector<OperatorSpec> parts;
};

/// Summands are placed along the diagonal in order; at most one of them may
/// be infinite-dimensional and it must come last.
struct DirectSum {
  std::vector<OperatorSpec> parts;
};

/// Operator on an infinite coordinate space given by finite data, realized
/// at any truncation size N by compressing to the first N coordinates.
class OperatorSpec {
 public:
  using Variant = std::variant<Dense, Banded, FiniteRank, Sum, DirectSum>;

  OperatorSpec(Variant v);  // NOLINT: implicit from any variant alternative

  static OperatorSpec dense(Matrix m) { return {Dense{std::move(m)}}; }
  static OperatorSpec zero() { return {Banded{}}; }
  /// Weighted shift with constant weight `c` on diagonal `offset`.
  static OperatorSpec constant_diagonal(long offset, const Scalar& c);
  static OperatorSpec backward_shift() { return constant_diagonal(1, Scalar(1)); }
  static OperatorSpec forward_shift() { return constant_diagonal(-1, Scalar(1)); }
  static OperatorSpec identity() { return constant_diagonal(0, Scalar(1)); }

  const Variant& variant() const { return v_; }
  const char* kind() const;

  /// Dimension of a finite-dimensional spec, nullopt for infinite ones.
  std::optional<std::size_t> fixed_dim() const;
  /// Smallest truncation size accepted by realize().
  std::size_t min_size() const;

 private:
  Variant v_;
};

/// N x N finite section. Throws std::invalid_argument if N < min_size().
Matrix realize(const OperatorSpec& spec, std::size_t n);

enum class Quantity { asc, dsc, alpha, beta };
enum class Classification { finite, divergent, inconclusive };

const char* to_string(Quantity q);
const char* to_string(Classification c);
Quantity parse_quantity(const std::string& s);

struct WindowConfig {
  std::size_t n0 = 16;
  std::size_t step = 8;
  std::size_t count = 4;
  /// Largest power tried by is_power_finite_rank.
  std::size_t power_bound = 4;

  std::vector<std::size_t> sizes() const;
  void validate() const;
};

struct TowerVerdict {
  Quantity quantity = Quantity::asc;
  Scalar lambda;
  /// (N, value) per window truncation.
  std::vector<std::pair<std::size_t, std::size_t>> per_truncation;
  Classification classification = Classification::inconclusive;
  /// Meaningful only when classification == finite.
  std::size_t value = 0;

  bool is_divergent() const { return classification == Classification::divergent; }
  bool is_finite() const { return classification == Classification::finite; }
};

using Realizer = std::function<Matrix(std::size_t)>;

/// finite(v) iff every window value equals v, divergent iff the values
/// strictly increase, inconclusive otherwise.
Classification classify_window(const std::vector<std::pair<std::size_t, std::size_t>>& values, std::size_t* finite_value);

TowerVerdict tower_verdict(const Realizer& realizer, const Scalar& lambda, Quantity q, const WindowConfig& cfg);
TowerVerdict tower_verdict(const OperatorSpec& spec, const Scalar& lambda, Quantity q, const WindowConfig& cfg);

/// Verdict of `q` for an already-shifted family (no lambda applied).
TowerVerdict tower_verdict_shifted(const Realizer& shifted, Quantity q, const WindowConfig& cfg);

struct TowerSpectrum {
  Quantity quantity = Quantity::asc;
  WindowConfig window;
  std::vector<TowerVerdict> points;
  /// Candidates classified divergent.
  std::vector<Scalar> members;
};

TowerSpectrum tower_spectrum(const OperatorSpec& spec, const std::vector<Scalar>& candidates, Quantity q,
                             const WindowConfig& cfg);

enum class Certainty { certain_true, likely_true, likely_false };
const char* to_string(Certainty c);

struct PowerFiniteRank {
  Certainty certainty = Certainty::likely_false;
  std::optional<std::size_t> n0;
  /// For empirical verdicts: ranks[n-1] = (N, rank of F_N^n) over the window.
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> ranks;
};

/// Whether some power of the operator has finite rank (membership in F̃).
PowerFiniteRank is_power_finite_rank(const OperatorSpec& spec, const WindowConfig& cfg);

}  // namespace ascdesc::tower
