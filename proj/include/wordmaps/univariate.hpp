#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "wordmaps/laurent.hpp"
#include "wordmaps/rational.hpp"

namespace wordmaps {

/// Dense univariate polynomial over Q; coeffs[i] multiplies z^i.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);
  UniPoly(const Rational& c);  // NOLINT
  UniPoly(long c) : UniPoly(Rational(c)) {}  // NOLINT

  static UniPoly monomial(int degree, const Rational& c = 1);
  /// Requires p to involve at most one variable, with nonnegative exponents.
  static UniPoly from_laurent(const LaurentPoly& p);
  LaurentPoly to_laurent(const std::string& var) const;

  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Rational coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : Rational(0); }
  const Rational& leading() const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  UniPoly operator-() const;
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

  /// Euclidean division: *this = q * d + r with deg r < deg d.
  void divmod(const UniPoly& d, UniPoly& q, UniPoly& r) const;
  UniPoly operator%(const UniPoly& d) const;
  UniPoly monic() const;
  UniPoly derivative() const;

  Rational eval(const Rational& z) const;
  std::complex<double> eval(std::complex<double> z) const;
  std::vector<std::complex<double>> to_complex() const;

  std::string to_string(const std::string& var = "z") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Monic gcd (zero if both are zero).
UniPoly gcd(const UniPoly& a, const UniPoly& b);

/// Element of Q[z]/(modulus), kept fully reduced.
class UniQuotient {
 public:
  UniQuotient(UniPoly value, UniPoly modulus);

  const UniPoly& value() const { return value_; }
  const UniPoly& modulus() const { return mod_; }
  bool is_zero() const { return value_.is_zero(); }

  UniQuotient operator+(const UniQuotient& o) const;
  UniQuotient operator-(const UniQuotient& o) const;
  UniQuotient operator*(const UniQuotient& o) const;
  UniQuotient operator-() const;
  UniQuotient pow(unsigned long k) const;
  /// Throws std::domain_error when the value shares a factor with the modulus.
  UniQuotient inverse() const;
  friend bool operator==(const UniQuotient& a, const UniQuotient& b) {
    return a.mod_ == b.mod_ && a.value_ == b.value_;
  }

 private:
  void check_same(const UniQuotient& o) const;
  UniPoly value_;
  UniPoly mod_;
};

UniQuotient quotient_reduce(const UniPoly& value, const UniPoly& modulus);

class RootFindingError : public std::runtime_error {
 public:
  RootFindingError(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}
  double best_residual() const { return residual_; }

 private:
  double residual_;
};

struct RootOptions {
  double tolerance = 1e-10;
  int max_iterations = 2000;
  int max_restarts = 8;
  std::uint64_t seed = 1;
};

/// All complex roots with multiplicity, by Aberth simultaneous iteration with
/// perturbed restarts. coeffs[i] multiplies z^i; the leading one must be nonzero.
/// The residual test is |p(r)| <= tolerance * (1 + sum |c_i| |r|^i).
std::vector<std::complex<double>> complex_roots(const std::vector<std::complex<double>>& coeffs,
                                                const RootOptions& opts = {});
std::vector<std::complex<double>> complex_roots(const UniPoly& p, const RootOptions& opts = {});

}  // namespace wordmaps
