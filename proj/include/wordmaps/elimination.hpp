#pragma once

#include <optional>
#include <string>

#include "wordmaps/laurent.hpp"

namespace wordmaps {

/// Exact quotient a / b in the Laurent ring, or nullopt when b does not divide a.
std::optional<LaurentPoly> try_divide(const LaurentPoly& a, const LaurentPoly& b);
/// Like try_divide but throws std::domain_error when the division is not exact.
LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b);

/// Resultant with respect to `var`: determinant of the Sylvester matrix with
/// the rows of p first, computed by fraction-free (Bareiss) elimination.
/// Both inputs must have nonnegative exponents in `var`.
LaurentPoly resultant(const LaurentPoly& p, const LaurentPoly& q, const std::string& var);

/// Greatest common divisor up to a unit (monomials and nonzero rationals).
/// Normalized to have no monomial factor and leading coefficient 1.
LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

struct DivisionCheck {
  LaurentPoly gcd;
  bool divides = false;
  std::optional<LaurentPoly> quotient;
};

/// gcd(p, q) together with whether p divides q, and q / p when it does.
DivisionCheck gcd_divides(const LaurentPoly& p, const LaurentPoly& q);

/// Strips the largest monomial factor and scales to leading coefficient 1.
LaurentPoly normalize_associate(const LaurentPoly& p);

/// True when p is a nonzero rational times a monomial, i.e. a unit of the ring.
inline bool is_unit(const LaurentPoly& p) { return p.is_monomial(); }

}  // namespace wordmaps
