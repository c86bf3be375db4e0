#include "ascdesc/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace ascdesc {

Polynomial::Polynomial(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Scalar Polynomial::operator()(const Scalar& x) const {
  Scalar acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Scalar> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * Scalar(static_cast<long>(k));
  return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return {};
  Scalar inv = leading().inverse();
  std::vector<Scalar> c = coeffs_;
  for (auto& x : c) x *= inv;
  return Polynomial(std::move(c));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Scalar> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) c[k] += a.coeffs_[k];
  for (std::size_t k = 0; k < b.coeffs_.size(); ++k) c[k] += b.coeffs_[k];
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  std::vector<Scalar> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) c[k] += a.coeffs_[k];
  for (std::size_t k = 0; k < b.coeffs_.size(); ++k) c[k] -= b.coeffs_[k];
  return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Scalar> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(c));
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {Polynomial{}, a};
  std::vector<Scalar> rem = a.coeffs();
  std::vector<Scalar> quot(a.coeffs().size() - b.coeffs().size() + 1);
  Scalar inv = b.leading().inverse();
  const std::size_t db = b.coeffs().size() - 1;
  for (std::size_t k = quot.size(); k-- > 0;) {
    Scalar q = rem[k + db] * inv;
    quot[k] = q;
    if (q.is_zero()) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= q * b.coeffs()[j];
  }
  rem.resize(db);
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    Polynomial r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Polynomial char_poly(const Matrix& a) {
  if (!a.is_square()) throw DimensionError("characteristic polynomial needs a square matrix");
  const std::size_t n = a.rows();
  // M_k = A M_{k-1} + c_{n-k+1} I,  c_{n-k} = -tr(A M_k)/k,  M_0 = 0, c_n = 1.
  std::vector<Scalar> c(n + 1);
  c[n] = 1;
  Matrix m = Matrix::zero(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = mat_mul(a, m);
    for (std::size_t i = 0; i < n; ++i) m(i, i) += c[n - k + 1];
    c[n - k] = -trace(mat_mul(a, m)) / Scalar(static_cast<long>(k));
  }
  return Polynomial(std::move(c));
}

Matrix evaluate(const Polynomial& p, const Matrix& a) {
  if (!a.is_square()) throw DimensionError("polynomial evaluation needs a square matrix");
  Matrix acc = Matrix::zero(a.rows(), a.cols());
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = mat_mul(acc, a);
    for (std::size_t i = 0; i < a.rows(); ++i) acc(i, i) += *it;
  }
  return acc;
}

}  // namespace ascdesc
