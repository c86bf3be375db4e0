#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ascdesc/chain.hpp"
#include "ascdesc/matrix.hpp"
#include "ascdesc/polynomial.hpp"

namespace ascdesc {

enum class Truth { no, yes, unknown };

const char* to_string(Truth t);

struct Eigenvalues {
  /// Distinct roots of the characteristic polynomial lying in Q(i), sorted.
  std::vector<Scalar> values;
  /// Algebraic multiplicity of each value.
  std::vector<std::size_t> multiplicities;
  /// Degree of the factor left unsplit over Q(i); 0 means complete.
  std::size_t residual_degree = 0;

  bool complete() const { return residual_degree == 0; }
};

/// Roots in Q(i) of a polynomial: candidates come from a numerical root
/// finder on the square-free part and are accepted only after exact evaluation.
Eigenvalues roots_in_gaussian_rationals(const Polynomial& p);
Eigenvalues eigenvalues_exact(const Matrix& t);

struct PointProfile {
  std::size_t asc = 0;
  std::size_t dsc = 0;
  std::size_t alpha = 0;
  std::size_t beta = 0;

  friend bool operator==(const PointProfile&, const PointProfile&) = default;
};

/// asc, dsc, alpha, beta of T - lambda*I.
PointProfile point_profile(const Matrix& t, const Scalar& lambda);

struct ProfilePoint {
  Scalar lambda;
  PointProfile profile;
};

/**
 * Ascent/descent spectrum of a dense matrix. Every chain of a finite
 * matrix stabilizes by dim X, so the spectrum itself is empty; the eigen
 * profile table is carried along for context.
 */
struct SpectrumProfile {
  std::vector<ProfilePoint> points;
  bool complete = true;
  std::size_t residual_degree = 0;
  std::vector<Scalar> sigma_asc;
  std::vector<Scalar> sigma_dsc;
  std::string certificate;
  /// Largest asc/dsc seen over the table, bounded by dim X.
  std::size_t max_index = 0;
};

SpectrumProfile ascent_spectrum(const Matrix& t);
SpectrumProfile descent_spectrum(const Matrix& t);

inline constexpr const char* kFiniteDimCertificate = "finite-dim-stabilization";

/// Eigenvalue multiset of p(T) equals p applied to that of T;
/// unknown when the characteristic polynomial of T does not split over Q(i).
Truth poly_spectral_map_check(const Matrix& t, const Polynomial& p);

}  // namespace ascdesc
