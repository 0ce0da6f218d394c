#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "wordmaps/laurent.hpp"
#include "wordmaps/matrix2.hpp"
#include "wordmaps/word.hpp"

namespace wordmaps {

/// {"s", "t", "u"}: traces of x, y and xy.
const std::vector<std::string>& stu_variables();

/// c1 + cX X + cY Y + cXY XY in the trace algebra over Q[s, t, u].
struct FrickeElement {
  LaurentPoly c1, cx, cy, cxy;

  FrickeElement();
  FrickeElement(LaurentPoly a, LaurentPoly b, LaurentPoly c, LaurentPoly d);
  static FrickeElement one();
  static FrickeElement X();
  static FrickeElement Y();

  FrickeElement times_X() const;
  FrickeElement times_Y() const;
  FrickeElement times_X_inverse() const;
  FrickeElement times_Y_inverse() const;

  friend FrickeElement operator+(const FrickeElement& a, const FrickeElement& b);
  friend FrickeElement operator-(const FrickeElement& a, const FrickeElement& b);
  friend FrickeElement operator*(const FrickeElement& a, const FrickeElement& b);
  FrickeElement scaled(const LaurentPoly& c) const;
  friend bool operator==(const FrickeElement& a, const FrickeElement& b);

  /// 2 c1 + s cX + t cY + u cXY.
  LaurentPoly trace() const;
  /// The element evaluated at concrete matrices, with s, t, u read off from them.
  RationalMatrix at(const RationalMatrix& x0, const RationalMatrix& y0) const;
  std::string to_string() const;
};

FrickeElement fricke_of_word(const Word& w);

/// psi_w(s, t, u) = (P, t, Q) with P = tr w and Q = tr(w y).
struct TraceMap {
  LaurentPoly P;
  LaurentPoly Q;

  /// (P, t, Q) evaluated at a point.
  template <class S>
  std::array<S, 3> apply(const std::array<S, 3>& stu) const {
    std::vector<S> pt(stu.begin(), stu.end());
    return {P.eval(pt), stu[1], Q.eval(pt)};
  }
};

TraceMap trace_polys(const Word& w);
/// outer after inner: (P_o(P_i, t, Q_i), t, Q_o(P_i, t, Q_i)).
TraceMap compose(const TraceMap& outer, const TraceMap& inner);

class SizeGuardError : public std::runtime_error {
 public:
  explicit SizeGuardError(const std::string& what) : std::runtime_error(what) {}
};

/// n-fold composition of psi_w. Throws SizeGuardError when a component exceeds max_terms.
TraceMap psi_iterate(const Word& w, int n, std::size_t max_terms = 500000);

/// v_1 = w, v_{k+1} = w(v_k, y).
Word iterate_word(const Word& w, int n);

using Complex = std::complex<double>;

/// x = [[s, -1], [1, 0]], y = [[0, eta], [-1/eta, t]] with eta + 1/eta = u.
std::pair<ComplexMatrix, ComplexMatrix> lift_character(Complex s, Complex t, Complex u);

struct PreimageResult {
  ComplexMatrix x;
  ComplexMatrix y;
  Complex s0;
  Complex t0;
  Complex u0;
  double residual = 0;
  int attempts = 0;
};

class PreimageError : public std::runtime_error {
 public:
  explicit PreimageError(const std::string& what) : std::runtime_error(what) {}
};

/// (x, y) with tr w(x, y) close to target. Two of s, t, u are fixed to small
/// rationals (`start` first, then random ones from the seed) and the third is
/// solved for, u whenever P_w involves it.
PreimageResult preimage_for_trace(const Word& w, Complex target, std::uint64_t seed = 0,
                                  std::optional<std::pair<Rational, Rational>> start = std::nullopt,
                                  int max_attempts = 64, double tolerance = 1e-8);

}  // namespace wordmaps
