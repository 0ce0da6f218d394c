#pragma once

#include <array>
#include <complex>
#include <ostream>
#include <stdexcept>

#include "wordmaps/laurent.hpp"
#include "wordmaps/rational.hpp"

namespace wordmaps {

/// 2x2 matrix over a commutative ring, row-major: [[a, b], [c, d]].
template <class T>
struct Matrix2 {
  std::array<T, 4> e{T(0), T(0), T(0), T(0)};

  Matrix2() = default;
  Matrix2(T a, T b, T c, T d) : e{std::move(a), std::move(b), std::move(c), std::move(d)} {}

  static Matrix2 identity() { return Matrix2(T(1), T(0), T(0), T(1)); }
  static Matrix2 diagonal(T a, T d) { return Matrix2(std::move(a), T(0), T(0), std::move(d)); }

  T& operator()(int r, int c) { return e[2 * r + c]; }
  const T& operator()(int r, int c) const { return e[2 * r + c]; }

  T det() const { return T(e[0] * e[3]) - T(e[1] * e[2]); }
  T trace() const { return T(e[0] + e[3]); }
  Matrix2 adjugate() const { return Matrix2(e[3], T(-e[1]), T(-e[2]), e[0]); }

  friend Matrix2 operator*(const Matrix2& x, const Matrix2& y) {
    return Matrix2(T(x.e[0] * y.e[0]) + T(x.e[1] * y.e[2]), T(x.e[0] * y.e[1]) + T(x.e[1] * y.e[3]),
                   T(x.e[2] * y.e[0]) + T(x.e[3] * y.e[2]), T(x.e[2] * y.e[1]) + T(x.e[3] * y.e[3]));
  }
  friend Matrix2 operator+(const Matrix2& x, const Matrix2& y) {
    return Matrix2(T(x.e[0] + y.e[0]), T(x.e[1] + y.e[1]), T(x.e[2] + y.e[2]), T(x.e[3] + y.e[3]));
  }
  friend Matrix2 operator-(const Matrix2& x, const Matrix2& y) {
    return Matrix2(T(x.e[0] - y.e[0]), T(x.e[1] - y.e[1]), T(x.e[2] - y.e[2]), T(x.e[3] - y.e[3]));
  }
  Matrix2 scaled(const T& s) const { return Matrix2(T(s * e[0]), T(s * e[1]), T(s * e[2]), T(s * e[3])); }
  Matrix2 operator-() const { return Matrix2(T(-e[0]), T(-e[1]), T(-e[2]), T(-e[3])); }

  friend bool operator==(const Matrix2& x, const Matrix2& y) { return x.e == y.e; }
  friend bool operator!=(const Matrix2& x, const Matrix2& y) { return !(x == y); }

  template <class F>
  auto map(F f) const -> Matrix2<decltype(f(e[0]))> {
    return {f(e[0]), f(e[1]), f(e[2]), f(e[3])};
  }
};

using RationalMatrix = Matrix2<Rational>;
using ComplexMatrix = Matrix2<std::complex<double>>;
using PolyMatrix = Matrix2<LaurentPoly>;

inline Rational ring_inverse(const Rational& q) {
  if (q == 0) throw std::domain_error("matrix is not invertible");
  return 1 / q;
}
inline std::complex<double> ring_inverse(const std::complex<double>& z) {
  if (z == 0.0) throw std::domain_error("matrix is not invertible");
  return 1.0 / z;
}
inline GaussianRational ring_inverse(const GaussianRational& z) {
  if (z.is_zero()) throw std::domain_error("matrix is not invertible");
  return z.inverse();
}
/// Only unit monomials (and nonzero constants) are invertible in a Laurent ring.
inline LaurentPoly ring_inverse(const LaurentPoly& p) {
  if (!p.is_monomial()) throw std::domain_error("determinant is not a unit: " + p.to_string());
  return p.inverse();
}

/// Inverse via the adjugate; the determinant must be a unit of the ring.
template <class T>
Matrix2<T> inverse(const Matrix2<T>& m) {
  T d = m.det();
  if (d == T(1)) return m.adjugate();
  return m.adjugate().scaled(ring_inverse(d));
}

template <class T>
Matrix2<T> power(const Matrix2<T>& m, long k, const Matrix2<T>* inv = nullptr) {
  Matrix2<T> base = k >= 0 ? m : (inv ? *inv : inverse(m));
  unsigned long n = k >= 0 ? static_cast<unsigned long>(k) : static_cast<unsigned long>(-k);
  Matrix2<T> result = Matrix2<T>::identity();
  while (n) {
    if (n & 1ul) result = result * base;
    n >>= 1ul;
    if (n) base = base * base;
  }
  return result;
}

template <class T>
std::ostream& operator<<(std::ostream& os, const Matrix2<T>& m) {
  return os << "[[" << m.e[0] << ", " << m.e[1] << "], [" << m.e[2] << ", " << m.e[3] << "]]";
}

std::string to_string(const RationalMatrix& m);
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace wordmaps
