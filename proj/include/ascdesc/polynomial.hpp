#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "ascdesc/matrix.hpp"

namespace ascdesc {

/// Univariate polynomial over Q(i); coeffs()[k] multiplies x^k.
/// Trailing zero coefficients are always trimmed, so the zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Scalar> coeffs);

  static Polynomial constant(const Scalar& c) { return Polynomial({c}); }
  static Polynomial x() { return Polynomial({Scalar(0), Scalar(1)}); }
  /// x - root
  static Polynomial linear(const Scalar& root) { return Polynomial({-root, Scalar(1)}); }

  const std::vector<Scalar>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const Scalar& leading() const { return coeffs_.back(); }

  Scalar operator()(const Scalar& x) const;
  Polynomial derivative() const;
  Polynomial monic() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();
  std::vector<Scalar> coeffs_;
};

/// Quotient and remainder; throws std::domain_error on division by zero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
/// Monic gcd (zero if both inputs are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// det(xI - A), monic, computed by the Faddeev-LeVerrier recurrence.
Polynomial char_poly(const Matrix& a);

/// p(A) by Horner's rule.
Matrix evaluate(const Polynomial& p, const Matrix& a);

}  // namespace ascdesc
