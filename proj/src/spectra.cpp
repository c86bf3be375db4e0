#include "ascdesc/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include <Eigen/Eigenvalues>

namespace ascdesc {

namespace {

struct ScalarLess {
  bool operator()(const Scalar& a, const Scalar& b) const { return canonical_less(a, b); }
};

std::vector<std::complex<double>> numeric_roots(const Polynomial& monic) {
  const long deg = monic.degree();
  if (deg <= 0) return {};
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(deg, deg);
  for (long k = 1; k < deg; ++k) companion(k, k - 1) = 1.0;
  for (long k = 0; k < deg; ++k) companion(k, deg - 1) = -monic.coeffs()[static_cast<std::size_t>(k)].to_complex();
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
  std::vector<std::complex<double>> out;
  for (long k = 0; k < deg; ++k) out.push_back(solver.eigenvalues()(k));
  return out;
}

// Best rational approximations by continued fractions, denominators <= bound.
std::vector<mpq_class> rational_candidates(double x, long bound) {
  std::vector<mpq_class> out;
  if (!std::isfinite(x)) return out;
  mpz_class h0 = 1, h1 = 0, k0 = 0, k1 = 1;
  double r = x;
  for (int step = 0; step < 40; ++step) {
    double a = std::floor(r);
    if (std::fabs(a) > 1e15) break;
    mpz_class ai(a);
    mpz_class h2 = ai * h0 + h1, k2 = ai * k0 + k1;
    if (k2 > bound) break;
    out.emplace_back(h2, k2);
    out.back().canonicalize();
    h1 = h0; h0 = h2; k1 = k0; k0 = k2;
    double frac = r - a;
    if (frac < 1e-14) break;
    r = 1.0 / frac;
  }
  return out;
}

std::vector<Scalar> candidates_for(std::complex<double> root, const mpz_class& denom) {
  std::vector<Scalar> out;
  // Roots of a monic polynomial over Q(i) are Gaussian integers after
  // scaling by the common denominator of the coefficients.
  if (denom < mpz_class(1L << 40)) {
    const double d = denom.get_d();
    const double sr = std::round(root.real() * d), si = std::round(root.imag() * d);
    if (std::fabs(sr) < 1e15 && std::fabs(si) < 1e15) {
      for (int dr = -1; dr <= 1; ++dr)
        for (int di = -1; di <= 1; ++di)
          out.emplace_back(mpq_class(mpz_class(sr + dr), denom), mpq_class(mpz_class(si + di), denom));
    }
  }
  auto re = rational_candidates(root.real(), 1000000);
  auto im = rational_candidates(root.imag(), 1000000);
  if (!re.empty() && !im.empty()) {
    out.emplace_back(re.back(), im.back());
    if (std::fabs(root.imag()) < 1e-9) out.emplace_back(re.back(), 0);
    if (std::fabs(root.real()) < 1e-9) out.emplace_back(0, im.back());
  }
  return out;
}

mpz_class coefficient_denominator(const Polynomial& p) {
  mpz_class d = 1;
  for (const auto& c : p.coeffs()) {
    mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), c.real().get_den_mpz_t());
    mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), c.imag().get_den_mpz_t());
  }
  return d;
}

SpectrumProfile dense_spectrum(const Matrix& t) {
  Eigenvalues eig = eigenvalues_exact(t);
  SpectrumProfile out;
  out.complete = eig.complete();
  out.residual_degree = eig.residual_degree;
  for (const auto& lambda : eig.values) {
    PointProfile prof = point_profile(t, lambda);
    out.max_index = std::max({out.max_index, prof.asc, prof.dsc});
    out.points.push_back({lambda, prof});
  }
  if (out.max_index > t.rows()) throw std::logic_error("chain index exceeds the ambient dimension");
  out.certificate = kFiniteDimCertificate;
  return out;
}

}  // namespace

const char* to_string(Truth t) {
  switch (t) {
    case Truth::no: return "false";
    case Truth::yes: return "true";
    case Truth::unknown: return "inconclusive";
  }
  return "inconclusive";
}

Eigenvalues roots_in_gaussian_rationals(const Polynomial& p) {
  Eigenvalues out;
  if (p.degree() <= 0) return out;
  Polynomial squarefree = divmod(p, gcd(p, p.derivative())).first.monic();
  mpz_class denom = coefficient_denominator(squarefree);

  std::map<Scalar, std::size_t, ScalarLess> found;
  auto try_root = [&](const Scalar& cand) {
    if (found.count(cand) || !squarefree(cand).is_zero()) return;
    found.emplace(cand, 0);
  };
  for (auto root : numeric_roots(squarefree))
    for (const auto& cand : candidates_for(root, denom)) try_root(cand);
  // Zero is common enough (nilpotent parts) to always test directly.
  try_root(Scalar(0));

  std::size_t split = 0;
  for (auto& [root, mult] : found) {
    Polynomial rest = p;
    Polynomial lin = Polynomial::linear(root);
    while (true) {
      auto [q, r] = divmod(rest, lin);
      if (!r.is_zero()) break;
      rest = std::move(q);
      ++mult;
    }
    split += mult;
    out.values.push_back(root);
    out.multiplicities.push_back(mult);
  }
  out.residual_degree = static_cast<std::size_t>(p.degree()) - split;
  return out;
}

Eigenvalues eigenvalues_exact(const Matrix& t) { return roots_in_gaussian_rationals(char_poly(t)); }

PointProfile point_profile(const Matrix& t, const Scalar& lambda) {
  ChainReport rep = chain_report(scalar_shift(t, lambda));
  return {rep.asc, rep.dsc, rep.alpha, rep.beta};
}

SpectrumProfile ascent_spectrum(const Matrix& t) { return dense_spectrum(t); }
SpectrumProfile descent_spectrum(const Matrix& t) { return dense_spectrum(t); }

Truth poly_spectral_map_check(const Matrix& t, const Polynomial& p) {
  Eigenvalues eig = eigenvalues_exact(t);
  if (!eig.complete()) return Truth::unknown;
  std::map<Scalar, std::size_t, ScalarLess> mapped;
  for (std::size_t k = 0; k < eig.values.size(); ++k) mapped[p(eig.values[k])] += eig.multiplicities[k];

  Eigenvalues image = eigenvalues_exact(evaluate(p, t));
  if (!image.complete()) return Truth::unknown;
  std::map<Scalar, std::size_t, ScalarLess> actual;
  for (std::size_t k = 0; k < image.values.size(); ++k) actual[image.values[k]] += image.multiplicities[k];
  return mapped == actual ? Truth::yes : Truth::no;
}

}  // namespace ascdesc
