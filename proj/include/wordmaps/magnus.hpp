#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wordmaps/laurent.hpp"
#include "wordmaps/matrix2.hpp"
#include "wordmaps/word.hpp"

namespace wordmaps {

/// Variable names t1..tn (and s1..sn for the W-variant).
std::vector<std::string> t_variables(int n);
std::vector<std::string> s_variables(int n);

/// [[kappa, 0], [ell, kappa^-1]] with kappa = prod t_i^kappa[i].
struct STMatrix {
  Exponents kappa;
  LaurentPoly ell;

  static STMatrix identity(int n);
  static STMatrix generator(int n, int index);

  LaurentPoly kappa_poly() const;
  PolyMatrix matrix() const;
  STMatrix inverse() const;
  friend STMatrix operator*(const STMatrix& a, const STMatrix& b);
  friend bool operator==(const STMatrix& a, const STMatrix& b) { return a.kappa == b.kappa && a.ell == b.ell; }
};

/// Image under g_i -> [[t_i, 0], [1, t_i^-1]]; the kernel is F^(2).
STMatrix mu1_image(const Word& w);
/// Image under g_i -> [[t_i, 0], [s_i, t_i^-1]] over Z[t_i^{+-1}, s_i].
PolyMatrix mu_w_image(const Word& w);
/// Image under g_i -> [[t_i, 0], [b_i, t_i^-1]]; all b_i must be nonzero.
PolyMatrix mu_b_image(const Word& w, const std::vector<long>& b);

/// Lower-left entry of mu1(w) for w in F^(1); nonzero iff w is not in F^(2).
/// Throws InapplicableError when some exponent sum is nonzero.
LaurentPoly obstruction_polynomial(const Word& w);

enum class DerivedLevel { NotInF1, InF1NotF2, InF2 };
std::string to_string(DerivedLevel level);

struct LevelInfo {
  DerivedLevel level;
  /// Only computed when all exponent sums vanish.
  std::optional<LaurentPoly> obstruction;
};
LevelInfo classify_derived_level(const Word& w);

/// Nonzero rationals ordered by height: 1, -1, 2, 1/2, -2, -1/2, 3, 1/3, 3/2, 2/3, ...
Rational height_sequence(std::size_t index);

/// First tuple (in shells of increasing height index) of nonzero rationals
/// where L does not vanish. One entry per variable of L.
std::vector<Rational> find_nonvanishing_point(const LaurentPoly& L);

struct UnipotentWitness {
  std::vector<Rational> a;
  Rational c;
  RationalMatrix S;
  std::vector<RationalMatrix> Z;
};

/// Z_i = S [[a_i, 0], [1, 1/a_i]] S^-1 with w(Z) = X exactly, where X has
/// trace 2 and determinant 1. Verified before returning.
UnipotentWitness unipotent_witness(const Word& w, const RationalMatrix& X,
                                   const std::optional<std::vector<Rational>>& a = std::nullopt);

}  // namespace wordmaps
