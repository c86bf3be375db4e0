#pragma once

#include <complex>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace ascdesc {

/// Raised for malformed textual input (scalars, matrices, specs).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when operand shapes or ambient dimensions do not agree.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/**
 * Exact element of Q(i): re + im*i with both parts arbitrary-precision
 * rationals. GMP keeps each part in lowest terms with a positive
 * denominator, so two values are equal iff their parts are identical.
 */
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long value) : re_(value), im_(0) {}  // NOLINT: implicit on purpose
  GaussianRational(mpq_class re, mpq_class im = 0);

  static GaussianRational i() { return {mpq_class(0), mpq_class(1)}; }

  /// Parses `<rat>`, `<rat>i`, `<rat>+<rat>i` or `<rat>-<rat>i`, where
  /// `<rat>` is an optionally signed integer or `p/q` with q > 0.
  /// A bare `i` / `-i` is accepted as shorthand for `1i` / `-1i`.
  static GaussianRational parse(std::string_view text);

  const mpq_class& real() const { return re_; }
  const mpq_class& imag() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  /// |z|^2, exact.
  mpq_class norm() const { return re_ * re_ + im_ * im_; }
  GaussianRational inverse() const;

  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

  /// Canonical text form; round-trips through parse().
  std::string to_string() const;

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  GaussianRational operator-() const { return {-re_, -im_}; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// Total order (real part first, then imaginary) used only for sorting
  /// and set containers; it has no algebraic meaning.
  friend bool canonical_less(const GaussianRational& a, const GaussianRational& b) {
    int c = cmp(a.re_, b.re_);
    return c != 0 ? c < 0 : cmp(a.im_, b.im_) < 0;
  }

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

/// Parses a single rational `[+-]p` or `[+-]p/q`, q > 0.
mpq_class parse_rational(std::string_view text);

}  // namespace ascdesc
