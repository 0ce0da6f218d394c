#include "wordmaps/triangular.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "wordmaps/errors.hpp"
#include "wordmaps/magnus.hpp"

namespace wordmaps {

namespace {

const std::vector<std::string>& lm_vars() {
  static const std::vector<std::string> v{"lambda", "mu"};
  return v;
}

LaurentPoly lm_monomial(long e_lambda, long e_mu, const Rational& c = 1) {
  return LaurentPoly::monomial(lm_vars(), {static_cast<int>(e_lambda), static_cast<int>(e_mu)}, c);
}

LaurentPoly h_in(long n, const std::string& var) { return h_poly(static_cast<int>(n), var).with_variables(lm_vars()); }

long sgn(long v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

}  // namespace

LaurentPoly h_poly(int n, const std::string& var) {
  if (n <= 0) throw std::invalid_argument("h_n needs n >= 1");
  std::vector<Term> terms;
  for (int j = 0; j < n; ++j) terms.push_back({{1 - n + 2 * j}, Rational(1)});
  return LaurentPoly::from_terms(std::make_shared<const std::vector<std::string>>(std::vector<std::string>{var}),
                                 std::move(terms));
}

UpperEvalResult eval_upper(const Word& w) {
  if (w.num_generators() != 2) throw InapplicableError("upper triangular evaluation needs a two-generator word");
  const std::vector<std::string> vars{"lambda", "mu", "c", "d"};
  auto lam = LaurentPoly::variable(vars, "lambda"), mu = LaurentPoly::variable(vars, "mu");
  auto c = LaurentPoly::variable(vars, "c"), d = LaurentPoly::variable(vars, "d");
  LaurentPoly zero(vars);
  std::vector<PolyMatrix> images{PolyMatrix(lam, c, zero, lam.inverse()), PolyMatrix(mu, d, zero, mu.inverse())};
  PolyMatrix m = evaluate(w, images);
  auto sums = exponent_sums(w);
  UpperEvalResult r;
  r.A = sums[0];
  r.B = sums[1];
  const LaurentPoly& off = m(0, 1);
  r.phi = off.coefficient("c", 1).coefficient("d", 0).with_variables(lm_vars());
  r.psi = off.coefficient("d", 1).coefficient("c", 0).with_variables(lm_vars());
  return r;
}

std::pair<LaurentPoly, LaurentPoly> closed_form_phipsi(const TwoLetterForm& form) {
  const std::size_t k = form.a.size();
  if (form.b.size() != k || k == 0) throw std::invalid_argument("malformed two-letter form");
  for (std::size_t i = 0; i < k; ++i)
    if (form.a[i] == 0 || form.b[i] == 0) throw std::invalid_argument("two-letter form exponents must be nonzero");
  long total_a = form.sum_a(), total_b = form.sum_b();
  LaurentPoly phi(lm_vars()), psi(lm_vars());
  long before_a = 0, before_b = 0;
  for (std::size_t i = 0; i < k; ++i) {
    long a = form.a[i], b = form.b[i];
    long after_a = total_a - before_a - a;  // sum_{j>i} a_j
    long after_b = total_b - before_b - b;  // sum_{j>i} b_j
    phi += h_in(std::labs(a), "lambda") * lm_monomial(before_a - after_a, before_b - (after_b + b), sgn(a));
    psi += h_in(std::labs(b), "mu") * lm_monomial(before_a + a - after_a, before_b - after_b, sgn(b));
    before_a += a;
    before_b += b;
  }
  return {phi, psi};
}

std::vector<std::pair<long, long>> BasicCommutatorExpr::support() const {
  std::vector<std::pair<long, long>> out;
  for (const auto& f : factors) {
    std::pair<long, long> key{f.n, f.m};
    if (std::find(out.begin(), out.end(), key) == out.end()) out.push_back(key);
  }
  return out;
}

long BasicCommutatorExpr::S(long n, long m) const {
  long count = 0;
  for (const auto& f : factors)
    if (f.n == n && f.m == m) ++count;
  return count;
}

long BasicCommutatorExpr::R(long n, long m) const {
  long total = 0;
  for (const auto& f : factors)
    if (f.n == n && f.m == m) total += f.s;
  return total;
}

Word BasicCommutatorExpr::expand() const {
  Word out(2);
  for (const auto& f : factors)
    out = out * commutator(Word::generator(2, 1, f.n), Word::generator(2, 2, f.m)).power(f.s);
  return out;
}

std::string BasicCommutatorExpr::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) s += ",";
    s += "[" + std::to_string(factors[i].n) + "," + std::to_string(factors[i].m) + "," + std::to_string(factors[i].s) + "]";
  }
  return s + "]";
}

BasicCommutatorExpr rewrite_basic(const Word& w) {
  if (w.num_generators() != 2) throw InapplicableError("basic commutator rewriting needs a two-generator word");
  for (long s : exponent_sums(w))
    if (s != 0) throw InapplicableError("word is not in the commutator subgroup");
  // With coset representatives x^a y^b, an x^k syllable read at abelianized
  // prefix (a, b) contributes x^a y^b x^k y^-b x^-(a+k) = w_{a,b} w_{a+k,b}^-1
  // (w_{0,b} = w_{n,0} = 1); y-syllables contribute nothing.
  BasicCommutatorExpr expr;
  auto push = [&](long n, long m, long s) {
    if (n == 0 || m == 0) return;
    auto& f = expr.factors;
    if (!f.empty() && f.back().n == n && f.back().m == m) {
      f.back().s += s;
      if (f.back().s == 0) f.pop_back();
    } else {
      f.push_back({n, m, s});
    }
  };
  long a = 0, b = 0;
  for (const auto& syl : w.syllables()) {
    if (syl.gen == 1) {
      push(a, b, 1);
      push(a + syl.exp, b, -1);
      a += syl.exp;
    } else {
      b += syl.exp;
    }
  }
  return expr;
}

std::pair<LaurentPoly, LaurentPoly> phipsi_from_basis(const BasicCommutatorExpr& expr) {
  LaurentPoly phi(lm_vars()), psi(lm_vars());
  for (const auto& [alpha, beta] : expr.support()) {
    long R = expr.R(alpha, beta);
    if (R == 0) continue;
    phi += h_in(std::labs(alpha), "lambda") * lm_monomial(alpha, 0, R * sgn(alpha)) * (1 - lm_monomial(0, 2 * beta));
    psi += h_in(std::labs(beta), "mu") * lm_monomial(0, beta, R * sgn(beta)) * (lm_monomial(2 * alpha, 0) - 1);
  }
  return {phi, psi};
}

long phi_at_one_i(const BasicCommutatorExpr& expr) {
  long N = 0;
  for (const auto& f : expr.factors)
    if (f.m % 2 != 0) N += 2 * f.s * f.n;
  return N;
}

namespace {

ComplexMatrix minus_identity() { return ComplexMatrix(-1.0, 0.0, 0.0, -1.0); }

// k-th root of [[0, 1], [-1, 0]] with determinant 1.
ComplexMatrix root_of_rotation(long k) {
  const Complex I(0, 1);
  ComplexMatrix P(1.0, 1.0, I, -I);
  double theta = std::numbers::pi / (2.0 * static_cast<double>(k));
  ComplexMatrix D(std::polar(1.0, theta), 0.0, 0.0, std::polar(1.0, -theta));
  return P * D * inverse(P);
}

}  // namespace

MinusIdResult minus_id_criterion(const Word& w, double tolerance) {
  if (w.num_generators() != 2) throw InapplicableError("the -id criterion needs a two-generator word");
  auto level = classify_derived_level(w).level;
  if (level != DerivedLevel::InF1NotF2)
    throw InapplicableError("the -id criterion needs a word in F^(1) \\ F^(2), got " + to_string(level));
  MinusIdResult out;
  out.N = phi_at_one_i(rewrite_basic(w));
  const ComplexMatrix J(0.0, 1.0, -1.0, 0.0);

  auto attempt = [&](bool swapped, long k) -> bool {
    Word u = swapped ? swap_generators(w) : w;
    BasicCommutatorExpr expr = rewrite_basic(u);
    if (k > 1) {
      for (auto& f : expr.factors) {
        if (f.m % k != 0) return false;
        f.m /= k;
      }
    }
    long N = phi_at_one_i(expr);
    if (N == 0) return false;
    Complex a = std::polar(1.0, std::numbers::pi / static_cast<double>(N));
    ComplexMatrix x(a, 0.0, 0.0, 1.0 / a);
    ComplexMatrix y = k > 1 ? root_of_rotation(k) : J;
    ComplexMatrix value = evaluate(u, std::vector<ComplexMatrix>{x, y});
    double residual = max_abs_diff(value, minus_identity());
    if (residual > tolerance) return false;
    out.in_image = true;
    out.route = std::string(k > 1 ? "gcd-" : "") + (swapped ? "psi" : "phi");
    out.route_N = N;
    out.gcd_k = k;
    // u(x, y) = w(y, x) when the generators were exchanged
    out.x = swapped ? y : x;
    out.y = swapped ? x : y;
    out.residual = residual;
    return true;
  };

  if (attempt(false, 1) || attempt(true, 1)) return out;
  for (bool swapped : {false, true}) {
    BasicCommutatorExpr expr = rewrite_basic(swapped ? swap_generators(w) : w);
    long k = 0;
    for (const auto& f : expr.factors) k = std::gcd(k, std::labs(f.m));
    if (k > 1 && attempt(swapped, k)) return out;
  }
  return out;
}

std::string to_string(CurveVerdict v) {
  switch (v) {
    case CurveVerdict::SurjectiveSL2: return "SurjectiveSL2";
    case CurveVerdict::SquareAlternative: return "SquareAlternative";
    case CurveVerdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

bool CurveTest::vanishes() const {
  return std::all_of(reduced.begin(), reduced.end(), [](long c) { return c == 0; });
}

namespace {

// sum c_i z^{e_i} in Q[z]/(z^M + 1), where z^M = -1 and z^{2M} = 1.
std::vector<long> reduce_mod_cyclic(const std::vector<std::pair<long, long>>& terms, long M) {
  std::vector<long> red(M, 0);
  for (const auto& [e, c] : terms) {
    long r = ((e % (2 * M)) + 2 * M) % (2 * M);
    if (r < M) red[r] += c;
    else red[r - M] -= c;
  }
  return red;
}

}  // namespace

CurveResult curve_divisibility(const TwoLetterForm& form) {
  const std::size_t k = form.a.size();
  long A = form.sum_a(), B = form.sum_b();
  if (A == 0 && B == 0) throw InapplicableError("curve criterion needs A(w) != 0 or B(w) != 0");
  CurveResult out;
  if (A != 0) {
    std::vector<std::pair<long, long>> terms;
    long Ai = 0;
    for (std::size_t i = 0; i < k; ++i) {
      Ai += form.a[i];
      terms.emplace_back(2 * Ai, form.b[i]);
    }
    out.tests.push_back({"A", std::labs(A), reduce_mod_cyclic(terms, std::labs(A))});
  }
  if (B != 0) {
    std::vector<std::pair<long, long>> terms;
    long Bi = 0;
    for (std::size_t i = 0; i < k; ++i) {
      terms.emplace_back(2 * Bi, form.a[i]);
      Bi += form.b[i];
    }
    out.tests.push_back({"B", std::labs(B), reduce_mod_cyclic(terms, std::labs(B))});
  }
  for (const auto& t : out.tests)
    if (!t.vanishes()) {
      out.verdict = CurveVerdict::SurjectiveSL2;
      return out;
    }
  auto all = [](const std::vector<long>& v, bool positive) {
    return std::all_of(v.begin(), v.end(), [positive](long e) { return positive ? e > 0 : e < 0; });
  };
  if (all(form.b, true)) out.sign_pattern = "all-b-positive";
  else if (all(form.b, false)) out.sign_pattern = "all-b-negative";
  else if (all(form.a, true)) out.sign_pattern = "all-a-positive";
  if (out.sign_pattern.empty()) return out;
  auto pp = proper_power_root(form.word());
  if (pp.k % 2 == 0) {
    out.verdict = CurveVerdict::SquareAlternative;
    out.square_root = form.conjugator * pp.root.power(pp.k / 2) * form.conjugator.inverse();
  }
  return out;
}

}  // namespace wordmaps
