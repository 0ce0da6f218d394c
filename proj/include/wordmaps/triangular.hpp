#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wordmaps/laurent.hpp"
#include "wordmaps/matrix2.hpp"
#include "wordmaps/word.hpp"

namespace wordmaps {

/// h_n(zeta) = zeta^(1-n) (1 + zeta^2 + ... + zeta^(2(n-1))), so h_n(1) = n.
LaurentPoly h_poly(int n, const std::string& var = "zeta");

/// Off-diagonal of w(x, y) for x = [[lambda, c], [0, 1/lambda]],
/// y = [[mu, d], [0, 1/mu]]: the (1,2) entry is c * phi + d * psi and the
/// diagonal is lambda^A mu^B. Polynomials are over (lambda, mu).
struct UpperEvalResult {
  long A = 0;
  long B = 0;
  LaurentPoly phi;
  LaurentPoly psi;
};

UpperEvalResult eval_upper(const Word& w);
/// The same decomposition from the exponents of x^{a_1} y^{b_1} ... x^{a_k} y^{b_k}.
std::pair<LaurentPoly, LaurentPoly> closed_form_phipsi(const TwoLetterForm& form);

/// Product of w_{n,m}^s with w_{n,m} = [x^n, y^m] = x^n y^m x^-n y^-m.
struct BasicFactor {
  long n;
  long m;
  long s;
  friend bool operator==(const BasicFactor& a, const BasicFactor& b) {
    return a.n == b.n && a.m == b.m && a.s == b.s;
  }
};

struct BasicCommutatorExpr {
  std::vector<BasicFactor> factors;

  std::vector<std::pair<long, long>> support() const;
  /// Number of appearances of w_{n,m}.
  long S(long n, long m) const;
  /// Sum of exponents at all appearances of w_{n,m}.
  long R(long n, long m) const;
  Word expand() const;
  std::string to_string() const;
};

/// Reduced representation of a two-generator word in F^(1) in the free basis
/// w_{n,m}. Throws InapplicableError when some exponent sum is nonzero.
BasicCommutatorExpr rewrite_basic(const Word& w);

/// Phi_w, Psi_w from R_w over (lambda, mu).
std::pair<LaurentPoly, LaurentPoly> phipsi_from_basis(const BasicCommutatorExpr& expr);

using Complex = std::complex<double>;

struct MinusIdResult {
  /// Phi_w(1, i) = sum over odd m of 2 R_w(n, m) n.
  long N = 0;
  bool in_image = false;
  /// "phi", "psi" (roles of x and y exchanged), "gcd-phi", "gcd-psi" or "none".
  std::string route = "none";
  /// Phi(1, i) of the word actually used by the route (swapped and/or reduced).
  long route_N = 0;
  long gcd_k = 1;
  ComplexMatrix x;
  ComplexMatrix y;
  double residual = 0;
};

/// Phi_w(1, i) as an integer via the basis formula.
long phi_at_one_i(const BasicCommutatorExpr& expr);

/// The -id criterion with a numerically verified witness (x, y) with w(x, y) = -id.
/// Falls back to exchanging x and y and to the gcd reduction of the m_j.
/// Throws InapplicableError unless w is a two-generator word in F^(1) \ F^(2).
MinusIdResult minus_id_criterion(const Word& w, double tolerance = 1e-9);

enum class CurveVerdict { SurjectiveSL2, SquareAlternative, Inconclusive };
std::string to_string(CurveVerdict v);

struct CurveTest {
  std::string name;  // "A" (roots of z^|A|+1) or "B" (roots of z^|B|+1)
  long modulus = 0;
  /// Reduced test polynomial, coefficient of z^e at index e.
  std::vector<long> reduced;
  bool vanishes() const;
};

struct CurveResult {
  CurveVerdict verdict = CurveVerdict::Inconclusive;
  std::vector<CurveTest> tests;
  /// Which sign pattern was used for the square alternative.
  std::string sign_pattern;
  std::optional<Word> square_root;
};

/// Sum b_i z^{2 A_i} mod z^|A| + 1 and sum a_i z^{2 B_i} mod z^|B| + 1, with
/// A_i = sum_{j<=i} a_j and B_i = sum_{j<i} b_j. A nonzero test polynomial
/// certifies surjectivity; otherwise a sign pattern plus an actual square root
/// gives the square alternative. Throws InapplicableError when A = B = 0.
CurveResult curve_divisibility(const TwoLetterForm& form);

}  // namespace wordmaps
