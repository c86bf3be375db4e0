#include "ascdesc/gaussian_rational.hpp"

#include <cctype>
#include <ostream>

namespace ascdesc {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

std::string trim(std::string_view s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::string rational_text(const mpq_class& q) {
  // mpq get_str prints "p" or "p/q" in canonical form.
  return q.get_str();
}

}  // namespace

mpq_class parse_rational(std::string_view raw) {
  std::string text = trim(raw);
  if (text.empty()) throw ParseError("empty rational");
  std::string_view body = text;
  bool negative = false;
  if (body.front() == '+' || body.front() == '-') {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) throw ParseError("malformed rational '" + text + "'");
  mpz_class n(std::string(num), 10), d(std::string(den), 10);
  if (d == 0) throw ParseError("zero denominator in '" + text + "'");
  mpq_class q(n, d);
  q.canonicalize();
  return negative ? mpq_class(-q) : q;
}

GaussianRational::GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

GaussianRational GaussianRational::parse(std::string_view raw) {
  std::string text = trim(raw);
  if (text.empty()) throw ParseError("empty scalar");
  if (text.back() != 'i') return {parse_rational(text), 0};

  std::string_view body(text.data(), text.size() - 1);
  // Split at the last sign that is not the leading one.
  size_t split = std::string_view::npos;
  for (size_t k = body.size(); k-- > 1;) {
    if (body[k] == '+' || body[k] == '-') {
      split = k;
      break;
    }
  }
  auto imag_part = [](std::string_view s) -> mpq_class {
    if (s.empty() || s == "+") return 1;
    if (s == "-") return -1;
    return parse_rational(s);
  };
  if (split == std::string_view::npos) return {0, imag_part(body)};
  return {parse_rational(body.substr(0, split)), imag_part(body.substr(split))};
}

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  mpq_class n = norm();
  return {re_ / n, -im_ / n};
}

std::string GaussianRational::to_string() const {
  if (sgn(im_) == 0) return rational_text(re_);
  std::string imag = rational_text(im_) + "i";
  if (sgn(re_) == 0) return imag;
  return rational_text(re_) + (sgn(im_) > 0 ? "+" : "") + imag;
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  if (sgn(o.im_) != 0) im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  if (sgn(o.im_) != 0) im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class r = re_ * o.re_ - im_ * o.im_;
  mpq_class m = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(m);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.to_string(); }

}  // namespace ascdesc
