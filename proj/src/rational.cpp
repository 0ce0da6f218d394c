#include "wordmaps/rational.hpp"

#include <stdexcept>

namespace wordmaps {

Rational parse_rational(const std::string& text) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0) {
    throw std::invalid_argument("not a rational number: '" + text + "'");
  }
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

double to_double(const Rational& q) { return q.get_d(); }

GaussianRational GaussianRational::inverse() const {
  Rational n = norm();
  if (n == 0) throw std::domain_error("inverse of zero Gaussian rational");
  return {re / n, -im / n};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re += o.re;
  im += o.im;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  Rational r = re * o.re - im * o.im;
  Rational i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) { return *this *= o.inverse(); }

std::string GaussianRational::to_string() const {
  if (im == 0) return re.get_str();
  std::string s = re == 0 ? "" : re.get_str();
  if (im > 0 && !s.empty()) s += "+";
  if (im == 1) return s + "i";
  if (im == -1) return s + "-i";
  return s + im.get_str() + "*i";
}

}  // namespace wordmaps
