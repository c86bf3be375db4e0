#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ascdesc/harness.hpp"
#include "ascdesc/matrix.hpp"
#include "ascdesc/numeric.hpp"
#include "ascdesc/tower.hpp"

namespace ascdesc::conv {

using harness::Json;

/// T_n = T + n^(-a) E, with E given explicitly or drawn from a seed.
struct Perturbation {
  enum class Kind { scaled, random };
  Kind kind = Kind::scaled;
  Matrix e;
  std::uint64_t seed = 0;
  double exponent = 1.0;
};

struct SequenceSpec {
  Matrix base;
  Perturbation perturbation;
  std::size_t n_start = 1;
  std::size_t n_end = 100;
  std::size_t stride = 1;

  /// Throws std::invalid_argument on an empty or inverted range, a
  /// non-positive exponent, or a perturbation of the wrong size.
  void validate() const;
  std::vector<std::size_t> samples() const;
  /// E itself (exact); for random perturbations it is regenerated from the seed.
  Matrix perturbation_matrix() const;
  num::CMatrix term(std::size_t n) const;
};

/// λ_n = λ + c n^(-b); c = 0 gives the constant sequence.
struct LambdaData {
  Scalar lambda;
  Scalar c;
  unsigned b = 1;

  std::complex<double> at(std::size_t n) const;
  Scalar exact_at(std::size_t n) const;
};

struct Sample {
  std::size_t n = 0;
  double dku = 0;  // δ(N(T_n), N(T))
  double dkl = 0;  // δ(N(T), N(T_n))
  double dru = 0;  // δ(R(T_n), R(T))
  double drl = 0;  // δ(R(T), R(T_n))
  double gamma = 0;
  std::size_t rank = 0;
  /// rank(T_n) differs from rank(T).
  bool rank_jump = false;
};

struct GapTrajectory {
  std::size_t limit_rank = 0;
  std::vector<Sample> samples;
};

/// Trajectory of T_n - λ_n against T - λ (λ defaults to zero).
GapTrajectory trajectory(const SequenceSpec& spec, const num::Tolerance& tol, const LambdaData& lambda = {});

enum class Side { upper, lower };
enum class Object { kernel, range };
enum class ConvergenceClass { converged, not_converged, inconclusive };

const char* to_string(Side s);
const char* to_string(Object o);
const char* to_string(ConvergenceClass c);

/// Tail = last tol.tail_window samples. Converged iff the one-sided delta is
/// below conv_tol on the whole tail, not converged iff it stays at or above
/// 10 conv_tol there. Throws std::invalid_argument if the trajectory is shorter than the tail.
ConvergenceClass classify_convergence(const GapTrajectory& traj, Side side, Object object, const num::Tolerance& tol);

/// Max of gamma over the tail window.
double limsup_gamma(const GapTrajectory& traj, const num::Tolerance& tol);

enum class ProbeId { lem1, lem2, lem3, lem4, T1, lemma5 };
const char* to_string(ProbeId p);
ProbeId parse_probe(const std::string& name);

struct ProbeVerdict {
  ProbeId probe = ProbeId::T1;
  /// "machinery" for dense sequences, "literal" for tower sequences.
  std::string mode;
  harness::Outcome outcome = harness::Outcome::inconclusive;
  std::string reason;
  Json hypotheses;
  Json witness;
  std::vector<harness::Check> checks;
};

/// Dense sequences: the chain conditions the proofs manipulate,
///   I_d: R(A^d) ∩ N(A) != {0}   and   V_d: R(A) + N(A^d) != X,   d = 0..dim,
/// compared between the limit A = T - λ and every tail term A_n = T_n - λ_n,
/// together with the convergence lemmas each proof cites.
ProbeVerdict probe(const SequenceSpec& spec, ProbeId id, const LambdaData& lambda, const num::Tolerance& tol);

/// T_n = base + n^(-exponent) perturbation on the truncation tower.
struct TowerSequenceSpec {
  tower::OperatorSpec base = tower::OperatorSpec::zero();
  tower::OperatorSpec perturbation = tower::OperatorSpec::zero();
  unsigned exponent = 1;
  std::size_t n_start = 1;
  std::size_t n_end = 20;
  std::size_t stride = 1;

  void validate() const;
  std::vector<std::size_t> samples() const;
  tower::Realizer term(std::size_t n) const;
};

/// Tower sequences: spectra statements over the truncation verdicts, taken literally.
ProbeVerdict probe(const TowerSequenceSpec& spec, ProbeId id, const LambdaData& lambda, const num::Tolerance& tol,
                   const tower::WindowConfig& window);

}  // namespace ascdesc::conv
