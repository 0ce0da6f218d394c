#pragma once

#include <complex>
#include <limits>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "wordmaps/rational.hpp"

namespace wordmaps {

using Exponents = std::vector<int>;

struct Term {
  Exponents exps;
  Rational coeff;
};

/// Graded-lex comparison: total degree first, then the first differing
/// exponent in declared variable order. Returns <0, 0, >0.
int grlex_compare(const Exponents& a, const Exponents& b);

/// Sparse multivariate Laurent polynomial with rational coefficients.
///
/// Terms are kept in graded-lex descending order with no zero coefficients,
/// so two equal polynomials over the same variable list have identical
/// storage. Binary operations between polynomials over different variable
/// lists work over the union (left operand's order first).
class LaurentPoly {
 public:
  using VarList = std::shared_ptr<const std::vector<std::string>>;

  LaurentPoly();
  explicit LaurentPoly(std::vector<std::string> vars);
  LaurentPoly(const Rational& c);  // NOLINT: constants convert implicitly
  LaurentPoly(long c);             // NOLINT
  LaurentPoly(int c) : LaurentPoly(static_cast<long>(c)) {}  // NOLINT

  static LaurentPoly constant(const Rational& c, std::vector<std::string> vars = {});
  static LaurentPoly variable(std::vector<std::string> vars, const std::string& name);
  static LaurentPoly variable(const std::string& name) { return variable({name}, name); }
  static LaurentPoly monomial(std::vector<std::string> vars, Exponents exps, const Rational& c = 1);
  /// Builds from arbitrary terms: sorts, merges duplicates and drops zeros.
  static LaurentPoly from_terms(VarList vars, std::vector<Term> terms);

  const std::vector<std::string>& variables() const { return *vars_; }
  const VarList& var_list() const { return vars_; }
  std::size_t num_vars() const { return vars_->size(); }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_unit_monomial() const { return is_monomial() && terms_[0].coeff == 1; }
  /// True when no exponent is negative.
  bool is_polynomial() const;
  Rational constant_term() const;
  /// Returns the coefficient if the polynomial is constant, else throws.
  Rational to_constant() const;

  int var_index(const std::string& name) const;  // -1 if absent
  bool has_var(const std::string& name) const { return var_index(name) >= 0; }
  /// Max / min exponent of a variable. Both are INT_MIN for the zero polynomial.
  int degree(const std::string& var) const;
  int min_degree(const std::string& var) const;
  int total_degree() const;
  bool depends_on(const std::string& var) const;

  const Term& leading_term() const;
  const Rational& leading_coefficient() const { return leading_term().coeff; }

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& scale(const Rational& c);
  LaurentPoly& operator/=(const Rational& c);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator/(LaurentPoly a, const Rational& c) { return a /= c; }
  LaurentPoly operator-() const;

  /// Exact equality of the represented elements (variable lists may differ).
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  /// Negative powers are allowed only for monomials (the units of the ring).
  LaurentPoly pow(long k) const;
  /// Multiplicative inverse; only monomials are invertible.
  LaurentPoly inverse() const;

  /// Re-expresses over `vars`, which must contain every variable in use.
  LaurentPoly with_variables(std::vector<std::string> vars) const;
  /// Drops variables whose exponents are all zero.
  LaurentPoly trimmed() const;

  /// Replaces `var` by `value`. Negative exponents need an invertible value.
  LaurentPoly substitute(const std::string& var, const LaurentPoly& value) const;
  /// Simultaneous substitution.
  LaurentPoly substitute(const std::map<std::string, LaurentPoly>& values) const;
  /// Rational specialization of some variables; they are removed from the list.
  LaurentPoly specialize(const std::map<std::string, Rational>& values) const;

  /// Coefficients with respect to `var`, highest exponent first; the
  /// coefficient polynomials no longer mention `var`.
  std::vector<std::pair<int, LaurentPoly>> coeff_split(const std::string& var) const;
  LaurentPoly coefficient(const std::string& var, int exponent) const;
  /// Dense coefficient list (index = exponent) in `var`; requires min degree >= 0.
  std::vector<LaurentPoly> dense_coefficients(const std::string& var) const;

  /// Multiplies by the monomial with the given exponents.
  LaurentPoly shifted(const Exponents& by) const;
  /// Componentwise minimum exponent over all terms (the largest monomial factor).
  Exponents min_exponents() const;

  template <class S>
  S eval(const std::vector<S>& point) const;

  std::string to_string() const;

 private:
  LaurentPoly(VarList vars, std::vector<Term> canonical_terms);

  static VarList make_vars(std::vector<std::string> vars);
  static std::pair<LaurentPoly, LaurentPoly> unify(const LaurentPoly& a, const LaurentPoly& b);

  VarList vars_;
  std::vector<Term> terms_;
};

inline std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

namespace detail {
inline Rational scalar_from(const Rational& q, const Rational*) { return q; }
inline GaussianRational scalar_from(const Rational& q, const GaussianRational*) { return {q, 0}; }
inline std::complex<double> scalar_from(const Rational& q, const std::complex<double>*) {
  return {q.get_d(), 0.0};
}
inline Rational scalar_inverse(const Rational& q) {
  if (q == 0) throw std::domain_error("zero assigned to an inverted variable");
  return 1 / q;
}
inline GaussianRational scalar_inverse(const GaussianRational& q) {
  if (q.is_zero()) throw std::domain_error("zero assigned to an inverted variable");
  return q.inverse();
}
inline std::complex<double> scalar_inverse(const std::complex<double>& z) { return 1.0 / z; }

template <class S>
S scalar_pow(const S& base, const S& inv, int e) {
  S result = scalar_from(Rational(1), static_cast<const S*>(nullptr));
  S b = e >= 0 ? base : inv;
  unsigned k = e >= 0 ? static_cast<unsigned>(e) : static_cast<unsigned>(-e);
  while (k) {
    if (k & 1u) result = result * b;
    k >>= 1u;
    if (k) b = b * b;
  }
  return result;
}
}  // namespace detail

template <class S>
S LaurentPoly::eval(const std::vector<S>& point) const {
  if (point.size() != num_vars()) throw std::invalid_argument("eval: point dimension mismatch");
  const S* tag = nullptr;
  std::vector<bool> needs_inverse(num_vars(), false);
  for (const auto& t : terms_)
    for (std::size_t i = 0; i < t.exps.size(); ++i)
      if (t.exps[i] < 0) needs_inverse[i] = true;
  std::vector<S> inverses;
  inverses.reserve(num_vars());
  for (std::size_t i = 0; i < num_vars(); ++i)
    inverses.push_back(needs_inverse[i] ? detail::scalar_inverse(point[i]) : detail::scalar_from(Rational(0), tag));
  S sum = detail::scalar_from(Rational(0), tag);
  for (const auto& t : terms_) {
    S term = detail::scalar_from(t.coeff, tag);
    for (std::size_t i = 0; i < t.exps.size(); ++i)
      if (t.exps[i] != 0) term = term * detail::scalar_pow(point[i], inverses[i], t.exps[i]);
    sum = sum + term;
  }
  return sum;
}

/// Parses polynomial text (sums of products of rationals, variables, integer
/// powers and parenthesized subexpressions). Explicit `*` is required between
/// factors. Unknown identifiers are an error when `vars` is non-empty;
/// otherwise variables are declared in order of first appearance.
LaurentPoly parse_poly(const std::string& text, const std::vector<std::string>& vars = {});

}  // namespace wordmaps
