#include "wordmaps/fricke.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "wordmaps/univariate.hpp"

namespace wordmaps {

const std::vector<std::string>& stu_variables() {
  static const std::vector<std::string> v{"s", "t", "u"};
  return v;
}

namespace {

LaurentPoly var(const char* name) { return LaurentPoly::variable(stu_variables(), name); }
LaurentPoly zero() { return LaurentPoly(stu_variables()); }
LaurentPoly unit() { return LaurentPoly::constant(1, stu_variables()); }

}  // namespace

FrickeElement::FrickeElement() : c1(zero()), cx(zero()), cy(zero()), cxy(zero()) {}

FrickeElement::FrickeElement(LaurentPoly a, LaurentPoly b, LaurentPoly c, LaurentPoly d)
    : c1(std::move(a)), cx(std::move(b)), cy(std::move(c)), cxy(std::move(d)) {}

FrickeElement FrickeElement::one() { return {unit(), zero(), zero(), zero()}; }
FrickeElement FrickeElement::X() { return {zero(), unit(), zero(), zero()}; }
FrickeElement FrickeElement::Y() { return {zero(), zero(), unit(), zero()}; }

// X^2 = sX - 1, YX = (u - st) + tX + sY - XY, XYX = -t + uX + Y
FrickeElement FrickeElement::times_X() const {
  auto s = var("s"), t = var("t"), u = var("u");
  return {-cx + cy * (u - s * t) - t * cxy, c1 + s * cx + t * cy + u * cxy, s * cy + cxy, -cy};
}

// Y^2 = tY - 1, XY * Y = tXY - X
FrickeElement FrickeElement::times_Y() const {
  auto t = var("t");
  return {-cy, -cxy, c1 + t * cy, cx + t * cxy};
}

FrickeElement FrickeElement::times_X_inverse() const { return scaled(var("s")) - times_X(); }
FrickeElement FrickeElement::times_Y_inverse() const { return scaled(var("t")) - times_Y(); }

FrickeElement operator+(const FrickeElement& a, const FrickeElement& b) {
  return {a.c1 + b.c1, a.cx + b.cx, a.cy + b.cy, a.cxy + b.cxy};
}

FrickeElement operator-(const FrickeElement& a, const FrickeElement& b) {
  return {a.c1 - b.c1, a.cx - b.cx, a.cy - b.cy, a.cxy - b.cxy};
}

FrickeElement operator*(const FrickeElement& a, const FrickeElement& b) {
  FrickeElement ax = a.times_X();
  return a.scaled(b.c1) + ax.scaled(b.cx) + a.times_Y().scaled(b.cy) + ax.times_Y().scaled(b.cxy);
}

FrickeElement FrickeElement::scaled(const LaurentPoly& c) const { return {c * c1, c * cx, c * cy, c * cxy}; }

bool operator==(const FrickeElement& a, const FrickeElement& b) {
  return a.c1 == b.c1 && a.cx == b.cx && a.cy == b.cy && a.cxy == b.cxy;
}

LaurentPoly FrickeElement::trace() const { return 2 * c1 + var("s") * cx + var("t") * cy + var("u") * cxy; }

RationalMatrix FrickeElement::at(const RationalMatrix& x0, const RationalMatrix& y0) const {
  RationalMatrix xy = x0 * y0;
  std::vector<Rational> pt{x0.trace(), y0.trace(), xy.trace()};
  return RationalMatrix::identity().scaled(c1.eval(pt)) + x0.scaled(cx.eval(pt)) + y0.scaled(cy.eval(pt)) +
         xy.scaled(cxy.eval(pt));
}

std::string FrickeElement::to_string() const {
  std::ostringstream out;
  out << "(" << c1.to_string() << ") + (" << cx.to_string() << ")*X + (" << cy.to_string() << ")*Y + ("
      << cxy.to_string() << ")*XY";
  return out.str();
}

FrickeElement fricke_of_word(const Word& w) {
  if (w.num_generators() != 2) throw std::invalid_argument("trace algebra needs a two-generator word");
  FrickeElement e = FrickeElement::one();
  for (const auto& syl : w.syllables()) {
    for (long k = 0; k < std::labs(syl.exp); ++k) {
      if (syl.gen == 1) e = syl.exp > 0 ? e.times_X() : e.times_X_inverse();
      else e = syl.exp > 0 ? e.times_Y() : e.times_Y_inverse();
    }
  }
  return e;
}

TraceMap trace_polys(const Word& w) {
  FrickeElement e = fricke_of_word(w);
  return {e.trace(), e.times_Y().trace()};
}

TraceMap compose(const TraceMap& outer, const TraceMap& inner) {
  std::map<std::string, LaurentPoly> sub{{"s", inner.P}, {"u", inner.Q}};
  return {outer.P.substitute(sub).with_variables(stu_variables()),
          outer.Q.substitute(sub).with_variables(stu_variables())};
}

TraceMap psi_iterate(const Word& w, int n, std::size_t max_terms) {
  if (n < 1) throw std::invalid_argument("psi_iterate needs n >= 1");
  TraceMap base = trace_polys(w);
  TraceMap cur = base;
  const double outer_degree = std::max(base.P.total_degree(), base.Q.total_degree());
  for (int k = 2; k <= n; ++k) {
    // monomials of degree <= D in three variables
    double D = outer_degree * std::max(cur.P.total_degree(), cur.Q.total_degree());
    if ((D + 1) * (D + 2) * (D + 3) / 6 > static_cast<double>(max_terms))
      throw SizeGuardError("psi iterate " + std::to_string(k) + " may exceed " + std::to_string(max_terms) + " terms");
    cur = compose(base, cur);
    if (cur.P.size() > max_terms || cur.Q.size() > max_terms)
      throw SizeGuardError("psi iterate " + std::to_string(k) + " has more than " + std::to_string(max_terms) + " terms");
  }
  return cur;
}

Word iterate_word(const Word& w, int n) {
  if (n < 1) throw std::invalid_argument("iterate_word needs n >= 1");
  Word v = w;
  for (int k = 2; k <= n; ++k) v = substitute(w, {v, Word::generator(2, 2)});
  return v;
}

std::pair<ComplexMatrix, ComplexMatrix> lift_character(Complex s, Complex t, Complex u) {
  Complex eta = (u + std::sqrt(u * u - 4.0)) / 2.0;
  ComplexMatrix x(s, -1.0, 1.0, 0.0);
  ComplexMatrix y(0.0, eta, -1.0 / eta, t);
  return {x, y};
}

PreimageResult preimage_for_trace(const Word& w, Complex target, std::uint64_t seed,
                                  std::optional<std::pair<Rational, Rational>> start, int max_attempts,
                                  double tolerance) {
  if (w.is_identity()) throw std::invalid_argument("identity word has constant trace 2");
  const LaurentPoly P = trace_polys(w).P;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-5, 5), den(1, 3);
  PreimageResult best;
  best.residual = std::numeric_limits<double>::infinity();
  // solve in u when possible; words like x^k only see s
  std::string solve = "u";
  for (const char* v : {"u", "s", "t"})
    if (P.degree(v) >= 1) {
      solve = v;
      break;
    }
  for (int attempt = 1; attempt <= max_attempts; ++attempt) {
    Rational p0, p1;
    if (attempt == 1 && start) {
      std::tie(p0, p1) = *start;
    } else {
      p0 = frac(num(rng), den(rng));
      p1 = frac(num(rng), den(rng));
    }
    std::map<std::string, Rational> fixed;
    std::vector<std::string> others;
    for (const auto& v : stu_variables())
      if (v != solve) others.push_back(v);
    fixed[others[0]] = p0;
    fixed[others[1]] = p1;
    LaurentPoly slice = P.specialize(fixed);
    if (slice.degree(solve) < 1) continue;
    auto coeffs = UniPoly::from_laurent(slice.with_variables({solve})).to_complex();
    coeffs[0] -= target;
    std::vector<Complex> roots;
    try {
      roots = complex_roots(coeffs);
    } catch (const RootFindingError&) {
      continue;
    }
    for (const Complex& r : roots) {
      std::map<std::string, Complex> pt{{others[0], to_double(p0)}, {others[1], to_double(p1)}, {solve, r}};
      auto [x, y] = lift_character(pt["s"], pt["t"], pt["u"]);
      double residual = std::abs(evaluate(w, std::vector<ComplexMatrix>{x, y}).trace() - target);
      if (residual < best.residual) best = {x, y, pt["s"], pt["t"], pt["u"], residual, attempt};
    }
    if (best.residual < tolerance) return best;
  }
  throw PreimageError("no preimage of the trace found within " + std::to_string(max_attempts) + " attempts");
}

}  // namespace wordmaps
