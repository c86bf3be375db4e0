#include "ascdesc/convergence.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ascdesc/chain.hpp"
#include "ascdesc/generators.hpp"
#include "ascdesc/io.hpp"
#include "ascdesc/spectra.hpp"
#include "ascdesc/subspace.hpp"

namespace ascdesc::conv {

namespace {

using harness::Check;
using harness::Outcome;
using num::CMatrix;
using num::FloatSubspace;

std::vector<std::size_t> sample_range(std::size_t start, std::size_t end, std::size_t stride) {
  std::vector<std::size_t> out;
  for (std::size_t n = start; n <= end; n += stride) out.push_back(n);
  return out;
}

void validate_range(std::size_t start, std::size_t end, std::size_t stride) {
  if (start == 0 || end < start || stride == 0)
    throw std::invalid_argument("sample range needs 1 <= n_start <= n_end and stride >= 1");
}

Truth truth(bool b) { return b ? Truth::yes : Truth::no; }

Truth from_class(ConvergenceClass c) {
  switch (c) {
    case ConvergenceClass::converged: return Truth::yes;
    case ConvergenceClass::not_converged: return Truth::no;
    case ConvergenceClass::inconclusive: break;
  }
  return Truth::unknown;
}

std::vector<double> tail_of(const GapTrajectory& traj, const num::Tolerance& tol, double Sample::*field) {
  if (traj.samples.size() < tol.tail_window)
    throw std::invalid_argument("trajectory has " + std::to_string(traj.samples.size()) +
                                " samples, fewer than the tail window " + std::to_string(tol.tail_window));
  std::vector<double> out;
  for (auto it = traj.samples.end() - static_cast<long>(tol.tail_window); it != traj.samples.end(); ++it)
    out.push_back((*it).*field);
  return out;
}

// Chain conditions of the limit and of the sequence terms, indexed by d = 0..D:
//   meet[d]: R(A^d) ∩ N(A) != {0}     sum[d]: R(A) + N(A^d) != X
struct Conditions {
  std::vector<bool> meet;
  std::vector<bool> sum;
};

Conditions exact_conditions(const Matrix& a) {
  const std::size_t n = a.rows();
  Conditions out;
  const Subspace kernel = kernel_basis(a), range = image_basis(a);
  Matrix power = Matrix::identity(n);
  for (std::size_t d = 0; d <= n; ++d) {
    if (d > 0) power = mat_mul(power, a);
    out.meet.push_back(!subspace_intersection(image_basis(power), kernel).is_zero());
    out.sum.push_back(!subspace_sum(range, kernel_basis(power)).is_full());
  }
  return out;
}

std::size_t joint_rank(const FloatSubspace& y, const FloatSubspace& z, const num::Tolerance& tol) {
  CMatrix stacked(static_cast<Eigen::Index>(y.ambient_dim), static_cast<Eigen::Index>(y.dim() + z.dim()));
  stacked << y.ortho_basis, z.ortho_basis;
  return num::numeric_rank(stacked, tol);
}

Conditions numeric_conditions(const CMatrix& a, const num::Tolerance& tol) {
  const std::size_t n = static_cast<std::size_t>(a.rows());
  Conditions out;
  const FloatSubspace kernel = num::numeric_kernel(a, tol), range = num::numeric_range(a, tol);
  CMatrix power = CMatrix::Identity(a.rows(), a.cols());
  for (std::size_t d = 0; d <= n; ++d) {
    if (d > 0) power = power * a;
    const FloatSubspace rd = num::numeric_range(power, tol), kd = num::numeric_kernel(power, tol);
    out.meet.push_back(rd.dim() + kernel.dim() > joint_rank(rd, kernel, tol));
    out.sum.push_back(joint_rank(range, kd, tol) < n);
  }
  return out;
}

// Forward: the limit condition carries over to every tail term.
// Backward: a condition shared by every tail term holds in the limit.
std::vector<std::size_t> forward_failures(const std::vector<bool>& limit, const std::vector<std::vector<bool>>& tail) {
  std::vector<std::size_t> bad;
  for (std::size_t d = 0; d < limit.size(); ++d) {
    if (!limit[d]) continue;
    if (std::any_of(tail.begin(), tail.end(), [d](const std::vector<bool>& t) { return !t[d]; })) bad.push_back(d);
  }
  return bad;
}

std::vector<std::size_t> backward_failures(const std::vector<bool>& limit, const std::vector<std::vector<bool>>& tail) {
  std::vector<std::size_t> bad;
  for (std::size_t d = 0; d < limit.size(); ++d) {
    if (limit[d]) continue;
    if (std::all_of(tail.begin(), tail.end(), [d](const std::vector<bool>& t) { return t[d]; })) bad.push_back(d);
  }
  return bad;
}

std::string list_d(const std::vector<std::size_t>& ds) {
  if (ds.empty()) return {};
  std::string out = "fails at d =";
  for (std::size_t d : ds) out += " " + std::to_string(d);
  return out;
}

Json bools(const std::vector<bool>& xs) {
  Json out = Json::array();
  for (bool b : xs) out.push_back(b);
  return out;
}

void finish(ProbeVerdict& v, bool gated, const std::string& gate_reason) {
  if (gated) {
    v.outcome = Outcome::inconclusive;
    v.reason = "hypothesis not met: " + gate_reason;
    return;
  }
  v.outcome = harness::decide(v.checks, v.reason);
}

// A tail whose γ decays at least like n^(-0.1) is read as tending to zero.
constexpr double kGammaDecaySlope = 0.1;

/// Log-log slope of γ between the first and last tail samples; 0 when undefined.
double gamma_tail_slope(const GapTrajectory& traj, const num::Tolerance& tol) {
  const std::vector<double> g = tail_of(traj, tol, &Sample::gamma);
  const std::size_t first = traj.samples[traj.samples.size() - tol.tail_window].n, last = traj.samples.back().n;
  if (first == last || !(g.front() > 0) || !(g.back() > 0) || std::isinf(g.front()) || std::isinf(g.back())) return 0.0;
  return std::log(g.back() / g.front()) / std::log(static_cast<double>(last) / static_cast<double>(first));
}

bool uses_asc(ProbeId id) { return id == ProbeId::lem1 || id == ProbeId::lem2 || id == ProbeId::T1; }
bool uses_dsc(ProbeId id) { return id == ProbeId::lem3 || id == ProbeId::lem4 || id == ProbeId::T1; }
bool forward(ProbeId id) { return id == ProbeId::lem2 || id == ProbeId::lem4 || id == ProbeId::T1; }
bool backward(ProbeId id) { return id == ProbeId::lem1 || id == ProbeId::lem3 || id == ProbeId::T1; }
/// lem1 and lem4 assume limsup γ(T_n - λ_n) > 0; the others assume closed range and attained distances.
bool needs_gamma(ProbeId id) { return id == ProbeId::lem1 || id == ProbeId::lem4; }

}  // namespace

void SequenceSpec::validate() const {
  if (!base.is_square() || base.rows() == 0) throw DimensionError("sequence base must be a nonempty square matrix");
  validate_range(n_start, n_end, stride);
  if (!(perturbation.exponent > 0.0) || !std::isfinite(perturbation.exponent))
    throw std::invalid_argument("perturbation exponent must be positive");
  if (perturbation.kind == Perturbation::Kind::scaled &&
      (perturbation.e.rows() != base.rows() || perturbation.e.cols() != base.cols()))
    throw DimensionError("perturbation E must have the shape of the base");
}

std::vector<std::size_t> SequenceSpec::samples() const { return sample_range(n_start, n_end, stride); }

Matrix SequenceSpec::perturbation_matrix() const {
  if (perturbation.kind == Perturbation::Kind::scaled) return perturbation.e;
  Rng rng(perturbation.seed);
  return random_entry_matrix(rng, base.rows());
}

CMatrix SequenceSpec::term(std::size_t n) const {
  const double scale = std::pow(static_cast<double>(n), -perturbation.exponent);
  return num::to_float(base) + scale * num::to_float(perturbation_matrix());
}

std::complex<double> LambdaData::at(std::size_t n) const {
  return lambda.to_complex() + c.to_complex() * std::pow(static_cast<double>(n), -static_cast<double>(b));
}

Scalar LambdaData::exact_at(std::size_t n) const {
  mpz_class denom;
  mpz_ui_pow_ui(denom.get_mpz_t(), n, b);
  return lambda + c * Scalar(mpq_class(1, denom));
}

GapTrajectory trajectory(const SequenceSpec& spec, const num::Tolerance& tol, const LambdaData& lambda) {
  spec.validate();
  tol.validate();
  const Matrix limit = scalar_shift(spec.base, lambda.lambda);
  const FloatSubspace kernel = num::to_float(kernel_basis(limit)), range = num::to_float(image_basis(limit));
  const Matrix e = spec.perturbation_matrix();
  const CMatrix base = num::to_float(spec.base), pert = num::to_float(e);
  const auto id = CMatrix::Identity(base.rows(), base.cols());

  GapTrajectory out;
  out.limit_rank = rank(limit);
  for (std::size_t n : spec.samples()) {
    const CMatrix a = base + std::pow(static_cast<double>(n), -spec.perturbation.exponent) * pert - lambda.at(n) * id;
    const FloatSubspace kn = num::numeric_kernel(a, tol), rn = num::numeric_range(a, tol);
    Sample s;
    s.n = n;
    s.dku = num::delta(kn, kernel);
    s.dkl = num::delta(kernel, kn);
    s.dru = num::delta(rn, range);
    s.drl = num::delta(range, rn);
    s.gamma = num::gamma(a, tol);
    s.rank = rn.dim();
    s.rank_jump = s.rank != out.limit_rank;
    out.samples.push_back(s);
  }
  return out;
}

const char* to_string(Side s) { return s == Side::upper ? "upper" : "lower"; }
const char* to_string(Object o) { return o == Object::kernel ? "kernel" : "range"; }

const char* to_string(ConvergenceClass c) {
  switch (c) {
    case ConvergenceClass::converged: return "converged";
    case ConvergenceClass::not_converged: return "not-converged";
    case ConvergenceClass::inconclusive: return "inconclusive";
  }
  return "?";
}

ConvergenceClass classify_convergence(const GapTrajectory& traj, Side side, Object object, const num::Tolerance& tol) {
  tol.validate();
  double Sample::*field = object == Object::kernel ? (side == Side::upper ? &Sample::dku : &Sample::dkl)
                                                   : (side == Side::upper ? &Sample::dru : &Sample::drl);
  const std::vector<double> tail = tail_of(traj, tol, field);
  if (std::all_of(tail.begin(), tail.end(), [&](double x) { return x < tol.conv_tol; })) return ConvergenceClass::converged;
  if (std::all_of(tail.begin(), tail.end(), [&](double x) { return x >= 10.0 * tol.conv_tol; }))
    return ConvergenceClass::not_converged;
  return ConvergenceClass::inconclusive;
}

double limsup_gamma(const GapTrajectory& traj, const num::Tolerance& tol) {
  const std::vector<double> tail = tail_of(traj, tol, &Sample::gamma);
  return *std::max_element(tail.begin(), tail.end());
}

const char* to_string(ProbeId p) {
  switch (p) {
    case ProbeId::lem1: return "lem1";
    case ProbeId::lem2: return "lem2";
    case ProbeId::lem3: return "lem3";
    case ProbeId::lem4: return "lem4";
    case ProbeId::T1: return "T1";
    case ProbeId::lemma5: return "lemma5";
  }
  return "?";
}

ProbeId parse_probe(const std::string& name) {
  for (ProbeId p : {ProbeId::lem1, ProbeId::lem2, ProbeId::lem3, ProbeId::lem4, ProbeId::T1, ProbeId::lemma5})
    if (name == to_string(p)) return p;
  throw std::invalid_argument("unknown probe '" + name + "'");
}

ProbeVerdict probe(const SequenceSpec& spec, ProbeId id, const LambdaData& lambda, const num::Tolerance& tol) {
  const GapTrajectory traj = trajectory(spec, tol, lambda);
  const double gamma_shifted = limsup_gamma(traj, tol);
  const double slope = gamma_tail_slope(traj, tol);
  const bool gamma_positive = gamma_shifted > 10.0 * tol.conv_tol && slope > -kGammaDecaySlope;

  std::vector<std::size_t> tail_n;
  for (auto it = traj.samples.end() - static_cast<long>(tol.tail_window); it != traj.samples.end(); ++it)
    tail_n.push_back(it->n);

  double gamma_plain = 0.0;
  for (std::size_t n : tail_n) gamma_plain = std::max(gamma_plain, num::gamma(spec.term(n), tol));

  // ‖T_n - T‖ = n^(-a) ‖E‖ must not increase along the samples.
  const double e_norm = num::spectral_norm(num::to_float(spec.perturbation_matrix()));
  bool envelope = true;
  double prev = num::kInfinity;
  for (const auto& s : traj.samples) {
    const double d = std::pow(static_cast<double>(s.n), -spec.perturbation.exponent) * e_norm;
    envelope = envelope && d <= prev;
    prev = d;
  }

  ProbeVerdict v;
  v.probe = id;
  v.mode = "machinery";
  v.hypotheses = Json{{"norm_convergence", envelope},
                      {"closed_range", true},
                      {"dist_reached", true},
                      {"basis", "finite dimension: every range is closed and every distance to a subspace is attained"},
                      {"limsup_gamma", io::float_json(gamma_shifted)},
                      {"limsup_gamma_unshifted", io::float_json(gamma_plain)},
                      {"gamma_tail_slope", io::float_json(slope)},
                      {"gamma_positive", gamma_positive}};

  auto lemma = [&](const char* claim, Side side, Object object) {
    ConvergenceClass c = classify_convergence(traj, side, object, tol);
    v.checks.push_back({claim, "literal", from_class(c), to_string(c)});
  };
  auto gamma_lemma = [&] {
    if (gamma_positive)
      lemma("limsup γ > 0 gives R(T_n - λ_n) upper-converging to R(T - λ)", Side::upper, Object::range);
    else
      v.checks.push_back({"limsup γ > 0 gives R(T_n - λ_n) upper-converging to R(T - λ)", "literal", Truth::unknown,
                          "cited lemma needs limsup γ > 0, which fails on this tail"});
  };

  if (id == ProbeId::lemma5) {
    lemma("N(T_n - λ_n) upper-converges to N(T - λ)", Side::upper, Object::kernel);
    lemma("closed range and attained distances give N(T_n - λ_n) lower-converging to N(T - λ)", Side::lower,
          Object::kernel);
    v.witness = Json{{"tail_n", tail_n}, {"tail_dkl", Json::array()}, {"limit_rank", traj.limit_rank}};
    for (auto it = traj.samples.end() - static_cast<long>(tol.tail_window); it != traj.samples.end(); ++it) {
      v.witness["tail_dkl"].push_back(io::float_json(it->dkl));
    }
    finish(v, !envelope, "T_n -> T in norm");
    return v;
  }

  const Matrix limit_op = scalar_shift(spec.base, lambda.lambda);
  const Conditions limit = exact_conditions(limit_op);
  std::vector<std::vector<bool>> tail_meet, tail_sum;
  const auto id_n = CMatrix::Identity(limit_op.rows(), limit_op.cols());
  for (std::size_t n : tail_n) {
    Conditions c = numeric_conditions(spec.term(n) - lambda.at(n) * id_n, tol);
    tail_meet.push_back(std::move(c.meet));
    tail_sum.push_back(std::move(c.sum));
  }

  // Dense spectra are empty, so every literal spectra statement is vacuous here.
  const bool asc = uses_asc(id), dsc = uses_dsc(id);
  if (asc) v.checks.push_back({"ascent-spectrum statement", "literal", Truth::yes, kFiniteDimCertificate});
  if (dsc) v.checks.push_back({"descent-spectrum statement", "literal", Truth::yes, kFiniteDimCertificate});
  if (asc && forward(id)) {
    auto bad = forward_failures(limit.meet, tail_meet);
    v.checks.push_back({"R(A^d) ∩ N(A) != {0} carries from A = T - λ to every tail A_n", "machinery", truth(bad.empty()), list_d(bad)});
  }
  if (asc && backward(id)) {
    auto bad = backward_failures(limit.meet, tail_meet);
    v.checks.push_back({"R(A_n^d) ∩ N(A_n) != {0} on the whole tail carries to A", "machinery", truth(bad.empty()), list_d(bad)});
  }
  if (dsc && forward(id)) {
    auto bad = forward_failures(limit.sum, tail_sum);
    v.checks.push_back({"R(A) + N(A^d) != X carries from A to every tail A_n", "machinery", truth(bad.empty()), list_d(bad)});
  }
  if (dsc && backward(id)) {
    auto bad = backward_failures(limit.sum, tail_sum);
    v.checks.push_back({"R(A_n) + N(A_n^d) != X on the whole tail carries to A", "machinery", truth(bad.empty()), list_d(bad)});
  }

  // Convergence lemmas cited by each proof.
  const bool cites_lower = id == ProbeId::lem2 || id == ProbeId::lem4 || id == ProbeId::T1;
  const bool cites_upper = id == ProbeId::lem1 || id == ProbeId::lem3 || id == ProbeId::T1;
  if (cites_upper) {
    lemma("N(T_n - λ_n) upper-converges to N(T - λ)", Side::upper, Object::kernel);
    gamma_lemma();
  }
  if (cites_lower) {
    lemma("closed range and attained distances give N(T_n - λ_n) lower-converging to N(T - λ)", Side::lower,
          Object::kernel);
    lemma("R(T_n - λ_n) lower-converges to R(T - λ)", Side::lower, Object::range);
  }

  Json tails = Json::array();
  for (std::size_t k = 0; k < tail_n.size(); ++k)
    tails.push_back(Json{{"n", tail_n[k]}, {"meet", bools(tail_meet[k])}, {"sum", bools(tail_sum[k])}});
  v.witness = Json{{"limit", Json{{"meet", bools(limit.meet)}, {"sum", bools(limit.sum)}}}, {"tail", tails}};

  if (!envelope) {
    finish(v, true, "T_n -> T in norm");
  } else if (needs_gamma(id)) {
    finish(v, !gamma_positive, "limsup γ(T_n - λ_n) > 0");
  } else {
    finish(v, false, {});
  }
  return v;
}

void TowerSequenceSpec::validate() const {
  validate_range(n_start, n_end, stride);
  if (exponent == 0) throw std::invalid_argument("perturbation exponent must be positive");
}

std::vector<std::size_t> TowerSequenceSpec::samples() const { return sample_range(n_start, n_end, stride); }

tower::Realizer TowerSequenceSpec::term(std::size_t n) const {
  mpz_class denom;
  mpz_ui_pow_ui(denom.get_mpz_t(), n, exponent);
  const Scalar scale(mpq_class(1, denom));
  return [this, scale](std::size_t size) {
    return mat_add(tower::realize(base, size), mat_scale(tower::realize(perturbation, size), scale));
  };
}

ProbeVerdict probe(const TowerSequenceSpec& spec, ProbeId id, const LambdaData& lambda, const num::Tolerance& tol,
                   const tower::WindowConfig& window) {
  spec.validate();
  tol.validate();
  window.validate();
  ProbeVerdict v;
  v.probe = id;
  v.mode = "literal";
  if (id == ProbeId::lemma5) {
    v.outcome = Outcome::inconclusive;
    v.reason = "kernel-convergence probe applies to dense sequences only";
    return v;
  }
  const auto samples = spec.samples();
  if (samples.size() < tol.tail_window)
    throw std::invalid_argument("tower sequence has fewer samples than the tail window");
  const std::vector<std::size_t> tail_n(samples.end() - static_cast<long>(tol.tail_window), samples.end());
  const std::size_t largest = window.sizes().back();

  double gamma_shifted = 0.0;
  for (std::size_t n : tail_n) {
    const Matrix a = scalar_shift(spec.term(n)(largest), lambda.exact_at(n));
    gamma_shifted = std::max(gamma_shifted, num::gamma(num::to_float(a), tol));
  }
  const bool gamma_positive = gamma_shifted > 10.0 * tol.conv_tol;
  v.hypotheses = Json{{"closed_range", true},
                      {"dist_reached", true},
                      {"basis", "evaluated on finite sections, where both hold"},
                      {"limsup_gamma", io::float_json(gamma_shifted)},
                      {"gamma_positive", gamma_positive},
                      {"window", io::to_json(window)}};

  auto statement = [&](tower::Quantity q) {
    const auto limit = tower::tower_verdict(spec.base, lambda.lambda, q, window);
    const Truth limit_in = limit.is_divergent() ? Truth::yes : limit.is_finite() ? Truth::no : Truth::unknown;
    Truth all_tail = Truth::yes;
    Json tail = Json::array();
    for (std::size_t n : tail_n) {
      const auto tv = tower::tower_verdict(spec.term(n), lambda.exact_at(n), q, window);
      const Truth in = tv.is_divergent() ? Truth::yes : tv.is_finite() ? Truth::no : Truth::unknown;
      if (in == Truth::no) all_tail = Truth::no;
      else if (in == Truth::unknown && all_tail == Truth::yes) all_tail = Truth::unknown;
      tail.push_back(Json{{"n", n}, {"verdict", io::to_json(tv)}});
    }
    const std::string name = tower::to_string(q);
    if (forward(id)) {
      Truth holds = limit_in == Truth::no ? Truth::yes
                    : limit_in == Truth::yes ? all_tail
                                             : (all_tail == Truth::yes ? Truth::yes : Truth::unknown);
      v.checks.push_back({"λ ∈ σ_" + name + "(T) implies λ_n ∈ σ_" + name + "(T_n) on the whole tail", "literal", holds, {}});
    }
    if (backward(id)) {
      Truth holds = all_tail == Truth::no ? Truth::yes
                    : all_tail == Truth::yes ? limit_in
                                             : (limit_in == Truth::yes ? Truth::yes : Truth::unknown);
      v.checks.push_back({"λ_n ∈ σ_" + name + "(T_n) on the whole tail implies λ ∈ σ_" + name + "(T)", "literal", holds, {}});
    }
    v.witness[name] = Json{{"limit", io::to_json(limit)}, {"tail", tail}};
  };
  v.witness = Json::object();
  if (uses_asc(id)) statement(tower::Quantity::asc);
  if (uses_dsc(id)) statement(tower::Quantity::dsc);
  finish(v, needs_gamma(id) && !gamma_positive, "limsup γ(T_n - λ_n) > 0");
  return v;
}

}  // namespace ascdesc::conv
