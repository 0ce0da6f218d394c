#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wordmaps/fricke.hpp"
#include "wordmaps/laurent.hpp"
#include "wordmaps/word.hpp"

namespace wordmaps {

/// Common zeros of p and q in C^2 form a finite set. Uses the gcd in the
/// polynomial ring, so a shared monomial factor such as C counts as a curve.
bool finite_common_zeros(const LaurentPoly& p, const LaurentPoly& q);

enum class BigVerdict { BigAt, NotEstablished };
std::string to_string(BigVerdict v);

struct BigLevel {
  int exponent;
  LaurentPoly p;  // over C, D
};

struct BigReport {
  Rational a;
  /// h1 = P(s, a, u) - 2 - C and h2 = Q(s, a, u) - a (C + 1) - D, over (s, u, C, D).
  LaurentPoly h1;
  LaurentPoly h2;
  /// Resultant of h1 and h2 in u (h1 rows first), over (s, C, D).
  LaurentPoly R;
  /// R = sum s^e p_e, highest e first.
  std::vector<BigLevel> levels;
  /// pairwise[i][j]: p_i and p_j have finitely many common zeros.
  std::vector<std::vector<bool>> pairwise;
  /// "any-root" when some h_j has a constant leading coefficient in u,
  /// "nonzero-root" when the best one is c s^k, empty when neither holds.
  std::string root_mode;
  BigVerdict verdict = BigVerdict::NotEstablished;
  std::string reason;
};

/// Specializes t = a and eliminates u. Throws InapplicableError when neither
/// h1 nor h2 involves u.
BigReport big_slice(const TraceMap& tm, const Rational& a);
BigReport big_slice(const Word& w, const Rational& a);

struct AlmostSurjectivityResult {
  bool established = false;
  std::optional<Rational> witness;
  std::vector<BigReport> reports;
};

/// Stops at the first sample a with BigAt(a).
AlmostSurjectivityResult almost_surjectivity(const Word& w, const std::vector<Rational>& samples);

struct IterateCheck {
  int n = 1;
  Rational a;
  /// "direct" (big_slice on psi^n), "propagated" (BigAt(a) for psi_w carries
  /// over to every iterate) or "none".
  std::string method = "none";
  BigReport base;
  std::optional<BigReport> direct;
  /// psi^n was built and agreed with the trace of v_n at a rational point.
  bool iterate_checked = false;
  std::string note;
  bool big() const { return method != "none"; }
};

struct IterateOptions {
  std::size_t max_terms = 500000;
  /// Direct elimination only when deg_u h1 + deg_u h2 stays below this.
  int max_sylvester = 12;
};

IterateCheck iterate_and_check(const Word& w, int n, const Rational& a, const IterateOptions& opts = {});

}  // namespace wordmaps
