#include "ascdesc/tower.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "ascdesc/chain.hpp"

namespace ascdesc::tower {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::size_t support(const Vector& v) {
  std::size_t s = 0;
  for (std::size_t k = 0; k < v.size(); ++k)
    if (!v[k].is_zero()) s = k + 1;
  return s;
}

void validate_direct_sum(const DirectSum& ds) {
  for (std::size_t k = 0; k + 1 < ds.parts.size(); ++k)
    if (!ds.parts[k].fixed_dim())
      throw std::invalid_argument("direct_sum: only the last summand may be infinite-dimensional");
}

std::size_t quantity_of(const ChainReport& rep, Quantity q) {
  switch (q) {
    case Quantity::asc: return rep.asc;
    case Quantity::dsc: return rep.dsc;
    case Quantity::alpha: return rep.alpha;
    case Quantity::beta: return rep.beta;
  }
  return 0;
}

bool all_certain(const std::vector<OperatorSpec>& parts, const WindowConfig& cfg, std::size_t* n0);

std::optional<std::size_t> certain_power(const OperatorSpec& spec, const WindowConfig& cfg) {
  return std::visit(overloaded{
                        [](const Dense&) -> std::optional<std::size_t> { return 1; },
                        [](const FiniteRank&) -> std::optional<std::size_t> { return 1; },
                        [](const Banded& b) -> std::optional<std::size_t> {
                          for (const auto& [off, seq] : b.diagonals)
                            if (!seq.vanishes()) return std::nullopt;
                          return 1;
                        },
                        [&](const Sum& s) -> std::optional<std::size_t> {
                          std::size_t n0 = 1;
                          // A sum of finite-rank operators has finite rank; powers beyond 1 don't distribute.
                          for (const auto& p : s.parts) {
                            auto c = certain_power(p, cfg);
                            if (!c || *c != 1) return std::nullopt;
                          }
                          return n0;
                        },
                        [&](const DirectSum& d) -> std::optional<std::size_t> {
                          std::size_t n0 = 1;
                          if (!all_certain(d.parts, cfg, &n0)) return std::nullopt;
                          return n0;
                        },
                    },
                    spec.variant());
}

bool all_certain(const std::vector<OperatorSpec>& parts, const WindowConfig& cfg, std::size_t* n0) {
  for (const auto& p : parts) {
    auto c = certain_power(p, cfg);
    if (!c) return false;
    *n0 = std::max(*n0, *c);
  }
  return true;
}

}  // namespace

Scalar EventuallyPeriodic::at(std::size_t k) const {
  if (k < pre.size()) return pre[k];
  if (period.empty()) return {};
  return period[(k - pre.size()) % period.size()];
}

bool EventuallyPeriodic::vanishes() const {
  return is_zero_vector(pre) && is_zero_vector(period);
}

OperatorSpec::OperatorSpec(Variant v) : v_(std::move(v)) {
  if (auto* ds = std::get_if<DirectSum>(&v_)) validate_direct_sum(*ds);
  if (auto* d = std::get_if<Dense>(&v_); d && !d->matrix.is_square())
    throw DimensionError("dense operator spec needs a square matrix");
}

OperatorSpec OperatorSpec::constant_diagonal(long offset, const Scalar& c) {
  Banded b;
  b.diagonals[offset] = EventuallyPeriodic{{}, {c}};
  return {std::move(b)};
}

const char* OperatorSpec::kind() const {
  return std::visit(overloaded{
                        [](const Dense&) { return "dense"; },
                        [](const Banded&) { return "banded"; },
                        [](const FiniteRank&) { return "finite_rank"; },
                        [](const Sum&) { return "sum"; },
                        [](const DirectSum&) { return "direct_sum"; },
                    },
                    v_);
}

std::optional<std::size_t> OperatorSpec::fixed_dim() const {
  return std::visit(overloaded{
                        [](const Dense& d) -> std::optional<std::size_t> { return d.matrix.rows(); },
                        [](const Banded&) -> std::optional<std::size_t> { return std::nullopt; },
                        [](const FiniteRank&) -> std::optional<std::size_t> { return std::nullopt; },
                        [](const Sum& s) -> std::optional<std::size_t> {
                          std::size_t dim = 0;
                          for (const auto& p : s.parts) {
                            auto d = p.fixed_dim();
                            if (!d) return std::nullopt;
                            dim = std::max(dim, *d);
                          }
                          return dim;
                        },
                        [](const DirectSum& ds) -> std::optional<std::size_t> {
                          std::size_t dim = 0;
                          for (const auto& p : ds.parts) {
                            auto d = p.fixed_dim();
                            if (!d) return std::nullopt;
                            dim += *d;
                          }
                          return dim;
                        },
                    },
                    v_);
}

std::size_t OperatorSpec::min_size() const {
  return std::visit(overloaded{
                        [](const Dense& d) -> std::size_t { return std::max<std::size_t>(d.matrix.rows(), 1); },
                        [](const Banded& b) -> std::size_t {
                          std::size_t n = 1;
                          for (const auto& [off, seq] : b.diagonals)
                            n = std::max({n, static_cast<std::size_t>(std::labs(off)) + 1, seq.pre.size()});
                          return n;
                        },
                        [](const FiniteRank& f) -> std::size_t {
                          std::size_t n = 1;
                          for (const auto& t : f.terms) n = std::max({n, support(t.u), support(t.v)});
                          return n;
                        },
                        [](const Sum& s) -> std::size_t {
                          std::size_t n = 1;
                          for (const auto& p : s.parts) n = std::max(n, p.min_size());
                          return n;
                        },
                        [](const DirectSum& ds) -> std::size_t {
                          std::size_t n = 0;
                          for (const auto& p : ds.parts) n += p.fixed_dim() ? *p.fixed_dim() : p.min_size();
                          return std::max<std::size_t>(n, 1);
                        },
                    },
                    v_);
}

Matrix realize(const OperatorSpec& spec, std::size_t n) {
  if (n < spec.min_size())
    throw std::invalid_argument("truncation size " + std::to_string(n) + " is below the minimum " +
                                std::to_string(spec.min_size()) + " for a " + spec.kind() + " spec");
  return std::visit(overloaded{
                        [n](const Dense& d) {
                          Matrix m(n, n);
                          m.set_block(0, 0, d.matrix);
                          return m;
                        },
                        [n](const Banded& b) {
                          Matrix m(n, n);
                          for (const auto& [off, seq] : b.diagonals) {
                            const std::size_t di = off < 0 ? static_cast<std::size_t>(-off) : 0;
                            const std::size_t dj = off > 0 ? static_cast<std::size_t>(off) : 0;
                            for (std::size_t k = 0; k + di < n && k + dj < n; ++k) m(k + di, k + dj) = seq.at(k);
                          }
                          return m;
                        },
                        [n](const FiniteRank& f) {
                          Matrix m(n, n);
                          for (const auto& t : f.terms)
                            for (std::size_t i = 0; i < std::min(n, t.u.size()); ++i) {
                              if (t.u[i].is_zero()) continue;
                              for (std::size_t j = 0; j < std::min(n, t.v.size()); ++j)
                                if (!t.v[j].is_zero()) m(i, j) += t.u[i] * t.v[j];
                            }
                          return m;
                        },
                        [n](const Sum& s) {
                          Matrix m(n, n);
                          for (const auto& p : s.parts) m += realize(p, n);
                          return m;
                        },
                        [n](const DirectSum& ds) {
                          Matrix m(n, n);
                          std::size_t offset = 0;
                          for (const auto& p : ds.parts) {
                            std::size_t size = p.fixed_dim() ? *p.fixed_dim() : n - offset;
                            if (size > 0) m.set_block(offset, offset, realize(p, size));
                            offset += size;
                          }
                          return m;
                        },
                    },
                    spec.variant());
}

const char* to_string(Quantity q) {
  switch (q) {
    case Quantity::asc: return "asc";
    case Quantity::dsc: return "dsc";
    case Quantity::alpha: return "alpha";
    case Quantity::beta: return "beta";
  }
  return "?";
}

const char* to_string(Classification c) {
  switch (c) {
    case Classification::finite: return "finite";
    case Classification::divergent: return "divergent";
    case Classification::inconclusive: return "inconclusive";
  }
  return "?";
}

const char* to_string(Certainty c) {
  switch (c) {
    case Certainty::certain_true: return "certain-true";
    case Certainty::likely_true: return "likely-true";
    case Certainty::likely_false: return "likely-false";
  }
  return "?";
}

Quantity parse_quantity(const std::string& s) {
  if (s == "asc") return Quantity::asc;
  if (s == "dsc") return Quantity::dsc;
  if (s == "alpha") return Quantity::alpha;
  if (s == "beta") return Quantity::beta;
  throw std::invalid_argument("unknown quantity '" + s + "'");
}

std::vector<std::size_t> WindowConfig::sizes() const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < count; ++k) out.push_back(n0 + k * step);
  return out;
}

void WindowConfig::validate() const {
  if (n0 == 0 || step == 0 || count < 2 || power_bound == 0)
    throw std::invalid_argument("window needs N0 >= 1, step >= 1, count >= 2");
}

Classification classify_window(const std::vector<std::pair<std::size_t, std::size_t>>& values,
                               std::size_t* finite_value) {
  if (values.empty()) return Classification::inconclusive;
  bool constant = true, increasing = true;
  for (std::size_t k = 1; k < values.size(); ++k) {
    constant = constant && values[k].second == values[0].second;
    increasing = increasing && values[k].second > values[k - 1].second;
  }
  if (constant) {
    if (finite_value) *finite_value = values[0].second;
    return Classification::finite;
  }
  return increasing ? Classification::divergent : Classification::inconclusive;
}

TowerVerdict tower_verdict_shifted(const Realizer& shifted, Quantity q, const WindowConfig& cfg) {
  cfg.validate();
  TowerVerdict out;
  out.quantity = q;
  for (std::size_t n : cfg.sizes()) out.per_truncation.emplace_back(n, quantity_of(chain_report(shifted(n)), q));
  out.classification = classify_window(out.per_truncation, &out.value);
  return out;
}

TowerVerdict tower_verdict(const Realizer& realizer, const Scalar& lambda, Quantity q, const WindowConfig& cfg) {
  TowerVerdict out = tower_verdict_shifted([&](std::size_t n) { return scalar_shift(realizer(n), lambda); }, q, cfg);
  out.lambda = lambda;
  return out;
}

TowerVerdict tower_verdict(const OperatorSpec& spec, const Scalar& lambda, Quantity q, const WindowConfig& cfg) {
  return tower_verdict([&](std::size_t n) { return realize(spec, n); }, lambda, q, cfg);
}

TowerSpectrum tower_spectrum(const OperatorSpec& spec, const std::vector<Scalar>& candidates, Quantity q,
                             const WindowConfig& cfg) {
  TowerSpectrum out;
  out.quantity = q;
  out.window = cfg;
  for (const auto& lambda : candidates) {
    out.points.push_back(tower_verdict(spec, lambda, q, cfg));
    if (out.points.back().is_divergent()) out.members.push_back(lambda);
  }
  return out;
}

PowerFiniteRank is_power_finite_rank(const OperatorSpec& spec, const WindowConfig& cfg) {
  cfg.validate();
  PowerFiniteRank out;
  if (auto n0 = certain_power(spec, cfg)) {
    out.certainty = Certainty::certain_true;
    out.n0 = n0;
    return out;
  }
  std::vector<Matrix> bases, powers;
  for (std::size_t n : cfg.sizes()) {
    bases.push_back(realize(spec, n));
    powers.push_back(bases.back());
  }
  const auto sizes = cfg.sizes();
  for (std::size_t p = 1; p <= cfg.power_bound; ++p) {
    if (p > 1)
      for (std::size_t k = 0; k < powers.size(); ++k) powers[k] = mat_mul(powers[k], bases[k]);
    std::vector<std::pair<std::size_t, std::size_t>> ranks;
    for (std::size_t k = 0; k < powers.size(); ++k) ranks.emplace_back(sizes[k], rank(powers[k]));
    out.ranks.push_back(ranks);
    std::size_t v = 0;
    if (classify_window(ranks, &v) == Classification::finite) {
      out.certainty = Certainty::likely_true;
      out.n0 = p;
      return out;
    }
  }
  out.certainty = Certainty::likely_false;
  return out;
}

}  // namespace ascdesc::tower
