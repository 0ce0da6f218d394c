#include "wordmaps/univariate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace wordmaps {

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly::UniPoly(const Rational& c) {
  if (c != 0) c_.push_back(c);
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UniPoly UniPoly::monomial(int degree, const Rational& c) {
  if (degree < 0) throw std::invalid_argument("negative degree");
  std::vector<Rational> v(degree + 1, Rational(0));
  v[degree] = c;
  return UniPoly(std::move(v));
}

UniPoly UniPoly::from_laurent(const LaurentPoly& p) {
  std::size_t used = 0;
  int var = -1;
  for (std::size_t i = 0; i < p.num_vars(); ++i)
    if (p.depends_on(p.variables()[i])) {
      ++used;
      var = static_cast<int>(i);
    }
  if (used > 1) throw std::invalid_argument("not a univariate polynomial: " + p.to_string());
  if (var < 0) return UniPoly(p.constant_term());
  std::vector<Rational> c;
  for (const auto& t : p.terms()) {
    int e = t.exps[var];
    if (e < 0) throw std::invalid_argument("negative exponent in univariate conversion");
    if (static_cast<int>(c.size()) <= e) c.resize(e + 1, Rational(0));
    c[e] += t.coeff;
  }
  return UniPoly(std::move(c));
}

LaurentPoly UniPoly::to_laurent(const std::string& var) const {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) terms.push_back({{static_cast<int>(i)}, c_[i]});
  return LaurentPoly::from_terms(std::make_shared<const std::vector<std::string>>(std::vector<std::string>{var}),
                                 std::move(terms));
}

const Rational& UniPoly::leading() const {
  if (c_.empty()) throw std::domain_error("zero polynomial has no leading coefficient");
  return c_.back();
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return UniPoly(std::move(c));
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

void UniPoly::divmod(const UniPoly& d, UniPoly& q, UniPoly& r) const {
  if (d.is_zero()) throw std::domain_error("division by the zero polynomial");
  r = *this;
  if (degree() < d.degree()) {
    q = UniPoly();
    return;
  }
  std::vector<Rational> qc(degree() - d.degree() + 1, Rational(0));
  Rational lead_inv = 1 / d.leading();
  while (!r.is_zero() && r.degree() >= d.degree()) {
    int shift = r.degree() - d.degree();
    Rational f = r.leading() * lead_inv;
    qc[shift] = f;
    for (int i = 0; i <= d.degree(); ++i) r.c_[i + shift] -= f * d.c_[i];
    r.trim();
  }
  q = UniPoly(std::move(qc));
}

UniPoly UniPoly::operator%(const UniPoly& d) const {
  UniPoly q, r;
  divmod(d, q, r);
  return r;
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  UniPoly r = *this;
  Rational inv = 1 / leading();
  for (auto& x : r.c_) x *= inv;
  return r;
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> c(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * static_cast<long>(i);
  return UniPoly(std::move(c));
}

Rational UniPoly::eval(const Rational& z) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

std::complex<double> UniPoly::eval(std::complex<double> z) const {
  std::complex<double> acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + it->get_d();
  return acc;
}

std::vector<std::complex<double>> UniPoly::to_complex() const {
  std::vector<std::complex<double>> out;
  out.reserve(c_.size());
  for (const auto& x : c_) out.emplace_back(x.get_d(), 0.0);
  return out;
}

std::string UniPoly::to_string(const std::string& var) const { return to_laurent(var).to_string(); }

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a, y = b;
  while (!y.is_zero()) {
    UniPoly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

UniQuotient::UniQuotient(UniPoly value, UniPoly modulus) : mod_(std::move(modulus)) {
  if (mod_.degree() < 1) throw std::domain_error("quotient modulus must have degree at least 1");
  value_ = value % mod_;
}

void UniQuotient::check_same(const UniQuotient& o) const {
  if (mod_ != o.mod_) throw std::invalid_argument("quotient ring elements with different moduli");
}

UniQuotient UniQuotient::operator+(const UniQuotient& o) const {
  check_same(o);
  return {value_ + o.value_, mod_};
}
UniQuotient UniQuotient::operator-(const UniQuotient& o) const {
  check_same(o);
  return {value_ - o.value_, mod_};
}
UniQuotient UniQuotient::operator*(const UniQuotient& o) const {
  check_same(o);
  return {value_ * o.value_, mod_};
}
UniQuotient UniQuotient::operator-() const { return {-value_, mod_}; }

UniQuotient UniQuotient::pow(unsigned long k) const {
  UniQuotient result(UniPoly(1), mod_), base = *this;
  while (k) {
    if (k & 1ul) result = result * base;
    k >>= 1ul;
    if (k) base = base * base;
  }
  return result;
}

UniQuotient UniQuotient::inverse() const {
  // extended Euclid: track s with s * value == r (mod modulus)
  UniPoly r0 = mod_, r1 = value_, s0, s1(1);
  while (!r1.is_zero()) {
    UniPoly q, r;
    r0.divmod(r1, q, r);
    UniPoly s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.degree() != 0) throw std::domain_error("element is not invertible in the quotient ring");
  return {s0 * UniPoly(1 / r0.leading()), mod_};
}

UniQuotient quotient_reduce(const UniPoly& value, const UniPoly& modulus) {
  if (modulus.is_zero()) throw std::domain_error("zero modulus");
  return {value, modulus};
}

namespace {

using cd = std::complex<double>;

cd horner(const std::vector<cd>& c, cd z) {
  cd acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

double scaled_residual(const std::vector<cd>& c, cd z) {
  double scale = 0, zp = 1;
  for (const auto& ci : c) {
    scale += std::abs(ci) * zp;
    zp *= std::abs(z);
  }
  return std::abs(horner(c, z)) / (1.0 + scale);
}

}  // namespace

std::vector<std::complex<double>> complex_roots(const std::vector<std::complex<double>>& coeffs,
                                                const RootOptions& opts) {
  std::vector<cd> c = coeffs;
  while (!c.empty() && c.back() == 0.0) c.pop_back();
  if (c.size() < 2) throw std::invalid_argument("complex_roots needs degree >= 1");
  std::vector<cd> roots;
  // exact zero roots
  std::size_t zeros = 0;
  while (zeros < c.size() && c[zeros] == 0.0) ++zeros;
  roots.assign(zeros, cd(0, 0));
  c.erase(c.begin(), c.begin() + static_cast<long>(zeros));
  const int n = static_cast<int>(c.size()) - 1;
  if (n == 0) return roots;
  cd lead = c.back();
  for (auto& x : c) x /= lead;
  if (n == 1) {
    roots.push_back(-c[0]);
    return roots;
  }
  std::vector<cd> dc(n);
  for (int i = 1; i <= n; ++i) dc[i - 1] = c[i] * static_cast<double>(i);

  double radius = 0;
  for (int i = 0; i < n; ++i) radius = std::max(radius, std::pow(std::abs(c[i]), 1.0 / (n - i)));
  radius = std::max(radius, 1e-3);

  std::mt19937_64 rng(opts.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double best = std::numeric_limits<double>::infinity();
  std::vector<cd> best_z;
  for (int attempt = 0; attempt <= opts.max_restarts; ++attempt) {
    std::vector<cd> z(n);
    double offset = 2 * std::numbers::pi * unit(rng);
    double r = radius * (0.5 + unit(rng));
    for (int k = 0; k < n; ++k) z[k] = std::polar(r, offset + 2 * std::numbers::pi * k / n);
    for (int it = 0; it < opts.max_iterations; ++it) {
      double max_step = 0;
      for (int k = 0; k < n; ++k) {
        cd pv = horner(c, z[k]);
        if (pv == 0.0) continue;
        cd ratio = pv / horner(dc, z[k]);
        cd sum = 0;
        for (int j = 0; j < n; ++j)
          if (j != k) sum += 1.0 / (z[k] - z[j]);
        cd w = ratio / (1.0 - ratio * sum);
        if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) w = cd(1e-3 * unit(rng), 1e-3 * unit(rng));
        z[k] -= w;
        max_step = std::max(max_step, std::abs(w) / (1.0 + std::abs(z[k])));
      }
      if (max_step < 1e-15) break;
    }
    double worst = 0;
    for (const auto& zk : z) worst = std::max(worst, scaled_residual(c, zk));
    if (worst < best) {
      best = worst;
      best_z = z;
    }
    if (worst <= opts.tolerance) break;
  }
  if (best > opts.tolerance)
    throw RootFindingError("root finder did not converge", best);
  roots.insert(roots.end(), best_z.begin(), best_z.end());
  return roots;
}

std::vector<std::complex<double>> complex_roots(const UniPoly& p, const RootOptions& opts) {
  return complex_roots(p.to_complex(), opts);
}

}  // namespace wordmaps
