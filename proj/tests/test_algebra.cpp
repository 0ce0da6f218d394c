#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "wordmaps/elimination.hpp"
#include "wordmaps/laurent.hpp"
#include "wordmaps/univariate.hpp"

using namespace wordmaps;

namespace {

LaurentPoly random_poly(std::mt19937& rng, const std::vector<std::string>& vars, int terms, int lo, int hi) {
  std::uniform_int_distribution<int> ex(lo, hi), co(-5, 5);
  std::vector<Term> ts;
  for (int k = 0; k < terms; ++k) {
    Exponents e(vars.size());
    for (auto& x : e) x = ex(rng);
    ts.push_back({e, frac(co(rng), 1 + (co(rng) + 5) % 3)});
  }
  return LaurentPoly::from_terms(std::make_shared<const std::vector<std::string>>(vars), ts);
}

// Sylvester determinant by cofactor expansion, independent of the Bareiss path.
LaurentPoly cofactor_det(const std::vector<std::vector<LaurentPoly>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  LaurentPoly sum;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<LaurentPoly>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<LaurentPoly> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(row);
    }
    LaurentPoly term = m[0][j] * cofactor_det(minor);
    if (j % 2) sum -= term;
    else sum += term;
  }
  return sum;
}

LaurentPoly sylvester_oracle(const LaurentPoly& p, const LaurentPoly& q, const std::string& v) {
  auto pc = p.dense_coefficients(v), qc = q.dense_coefficients(v);
  int m = static_cast<int>(pc.size()) - 1, n = static_cast<int>(qc.size()) - 1;
  std::vector<std::vector<LaurentPoly>> M(m + n, std::vector<LaurentPoly>(m + n));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k <= m; ++k) M[i][i + k] = pc[m - k];
  for (int i = 0; i < m; ++i)
    for (int k = 0; k <= n; ++k) M[n + i][i + k] = qc[n - k];
  return cofactor_det(M);
}

}  // namespace

TEST_CASE("ring operations on Laurent polynomials") {
  auto t1 = LaurentPoly::variable({"t1"}, "t1");
  CHECK((t1 + t1.inverse()) * t1 == parse_poly("t1^2 + 1"));
  auto lam = LaurentPoly::variable("lambda");
  CHECK((lam - 1) * (lam + 1) == lam.pow(2) - 1);
  CHECK(t1.inverse().pow(-2) == t1.pow(2));
  CHECK_THROWS_AS((t1 + 1).pow(-1), std::domain_error);
}

TEST_CASE("canonical text form") {
  auto p = parse_poly("t2^2*t1^-1*7/36 - 1", {"t1", "t2"});
  CHECK(p.to_string() == "7/36*t1^-1*t2^2 - 1");
  CHECK(parse_poly(p.to_string(), {"t1", "t2"}) == p);
  CHECK(parse_poly("0").to_string() == "0");
  CHECK(parse_poly("-x + x^2", {"x"}).to_string() == "x^2 - x");
}

TEST_CASE("ring axioms hold on random sparse Laurent polynomials") {
  std::mt19937 rng(11);
  std::vector<std::string> vars{"a", "b", "c"};
  for (int it = 0; it < 40; ++it) {
    auto p = random_poly(rng, vars, 4, -2, 2), q = random_poly(rng, vars, 3, -2, 2), r = random_poly(rng, vars, 3, -1, 2);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK(p * q == q * p);
    CHECK(p + q - q == p);
  }
}

TEST_CASE("evaluation") {
  auto L = parse_poly("t1^-1 + t1^-2*t2^-1 - t1^-1*t2^-2 - t2^-1", {"t1", "t2"});
  CHECK(L.eval(std::vector<Rational>{2, 3}) == frac(7, 36));
  auto f = parse_poly("lambda*(1 - mu^2)", {"lambda", "mu"});
  CHECK(f.eval(std::vector<Rational>{1, 1}) == 0);
  CHECK(f.eval(std::vector<GaussianRational>{GaussianRational{1, 0}, GaussianRational::i()}) == GaussianRational{2, 0});
  CHECK_THROWS_AS(L.eval(std::vector<Rational>{0, 3}), std::domain_error);

  std::mt19937 rng(5);
  std::vector<std::string> vars{"a", "b"};
  for (int it = 0; it < 30; ++it) {
    auto p = random_poly(rng, vars, 4, -2, 3), q = random_poly(rng, vars, 4, -2, 3);
    std::vector<Rational> pt{frac(1 + it % 4, 3), frac(-2, 1 + it % 5)};
    CHECK((p * q).eval(pt) == p.eval(pt) * q.eval(pt));
  }
}

TEST_CASE("coefficient split reconstructs the polynomial") {
  auto p = parse_poly("s^4*C + s^2*D + 1", {"s", "C", "D"});
  auto split = p.coeff_split("s");
  REQUIRE(split.size() == 3);
  CHECK(split[0].first == 4);
  CHECK(split[0].second == parse_poly("C"));
  CHECK(split[1].first == 2);
  CHECK(split[2].second == LaurentPoly(1));
  auto q = parse_poly("lambda^2*mu - lambda^2", {"lambda", "mu"});
  auto qs = q.coeff_split("lambda");
  REQUIRE(qs.size() == 1);
  CHECK(qs[0].first == 2);
  CHECK(qs[0].second == parse_poly("mu - 1"));

  std::mt19937 rng(3);
  for (int it = 0; it < 20; ++it) {
    auto r = random_poly(rng, {"s", "C", "D"}, 6, -1, 3);
    LaurentPoly back;
    for (auto& [e, c] : r.coeff_split("s")) back += c * LaurentPoly::monomial({"s"}, {e});
    CHECK(back == r);
  }
}

TEST_CASE("resultants") {
  CHECK(resultant(parse_poly("u - s"), parse_poly("u - t"), "u") == parse_poly("s - t"));
  CHECK(resultant(parse_poly("u^2 - s"), parse_poly("u"), "u") == parse_poly("-s"));
  CHECK_THROWS(resultant(parse_poly("s"), parse_poly("t"), "u"));

  std::mt19937 rng(17);
  std::vector<std::string> vars{"u", "s", "t"};
  for (int it = 0; it < 15; ++it) {
    auto p = random_poly(rng, vars, 4, 0, 3), q = random_poly(rng, vars, 3, 0, 2);
    if (p.degree("u") < 1 && q.degree("u") < 1) continue;
    auto r = resultant(p, q, "u");
    CHECK(r == sylvester_oracle(p, q, "u"));
    auto r2 = resultant(q, p, "u");
    int sign = (p.degree("u") * q.degree("u")) % 2 ? -1 : 1;
    CHECK(r == r2 * sign);
  }
}

TEST_CASE("resultant vanishes exactly for planted common factors") {
  std::mt19937 rng(23);
  std::vector<std::string> vars{"u", "s"};
  for (int it = 0; it < 10; ++it) {
    auto common = random_poly(rng, vars, 2, 0, 2) + LaurentPoly::monomial(vars, {1, 0});
    auto p = random_poly(rng, vars, 3, 0, 2) + 1, q = random_poly(rng, vars, 3, 0, 2) + 2;
    if (common.degree("u") < 1) continue;
    CHECK(resultant(p * common, q * common, "u").is_zero());
    auto g = gcd(p * common, q * common);
    CHECK(g.degree("u") >= 1);
  }
  // coprime pair: nonzero resultant and constant gcd
  auto a = parse_poly("u^2 + s*u + 1", {"u", "s"}), b = parse_poly("u - s", {"u", "s"});
  CHECK(!resultant(a, b, "u").is_zero());
  CHECK(gcd(a, b).is_constant());
}

TEST_CASE("gcd and exact division") {
  auto g = gcd(parse_poly("C^2 - D^2"), parse_poly("C - D"));
  CHECK(g == normalize_associate(parse_poly("C - D")));
  std::mt19937 rng(29);
  std::vector<std::string> vars{"C", "D"};
  for (int it = 0; it < 25; ++it) {
    auto p = random_poly(rng, vars, 3, 0, 2), q = random_poly(rng, vars, 3, -1, 2);
    if (p.is_zero()) continue;
    auto check = gcd_divides(p, q * p);
    CHECK(check.divides);
    REQUIRE(check.quotient.has_value());
    CHECK(*check.quotient == q);
  }
  CHECK_FALSE(gcd_divides(parse_poly("C + 1"), parse_poly("C^2 + 2")).divides);
  CHECK_THROWS(gcd_divides(LaurentPoly(), parse_poly("C")));
}

TEST_CASE("multivariate gcd recovers a planted factor") {
  std::vector<std::string> vars{"C", "D", "s"};
  auto f = parse_poly("C*D - s + 2", vars);
  auto a = f * parse_poly("C^2 + s*D + 1", vars), b = f * parse_poly("D^3 - C*s", vars);
  CHECK(gcd(a, b) == normalize_associate(f));
  CHECK(gcd(a * f, b * f) == normalize_associate(f * f));
}

TEST_CASE("quotient rings") {
  UniPoly mod(std::vector<Rational>{frac(1, 2), 0, 1});  // t^2 + 1/2
  auto q11 = UniPoly::from_laurent(parse_poly("16*t^4 + 8*t^3 + 12*t^2 + 4*t + 1"));
  auto q22 = UniPoly::from_laurent(parse_poly("-8*t^3 + 4*t^2 - 4*t + 1"));
  CHECK(quotient_reduce(q11, mod).value() == UniPoly(-1));
  CHECK(quotient_reduce(q22, mod).value() == UniPoly(-1));
  CHECK(quotient_reduce(UniPoly::monomial(2), mod).value() == UniPoly(frac(-1, 2)));
  CHECK_THROWS(quotient_reduce(q11, UniPoly()));

  UniQuotient x(UniPoly::from_laurent(parse_poly("3*t + 2")), mod);
  CHECK(x * x.inverse() == UniQuotient(UniPoly(1), mod));
  UniQuotient zero(UniPoly::from_laurent(parse_poly("t^2 + 1/2")), mod);
  CHECK(zero.is_zero());
  CHECK_THROWS_AS(zero.inverse(), std::domain_error);
}

TEST_CASE("complex roots") {
  using cd = std::complex<double>;
  auto r = complex_roots(std::vector<cd>{1, 0, 1});
  REQUIRE(r.size() == 2);
  std::sort(r.begin(), r.end(), [](cd a, cd b) { return a.imag() < b.imag(); });
  CHECK(std::abs(r[0] - cd(0, -1)) < 1e-12);
  CHECK(std::abs(r[1] - cd(0, 1)) < 1e-12);

  auto d = complex_roots(std::vector<cd>{1, -2, 1});
  REQUIRE(d.size() == 2);
  for (auto z : d) CHECK(std::abs(z - 1.0) < 1e-7);

  auto c = complex_roots(std::vector<cd>{-1, 0, 0, 1});
  REQUIRE(c.size() == 3);
  for (auto z : c) CHECK(std::abs(z * z * z - 1.0) < 1e-12);

  std::mt19937 rng(41);
  std::uniform_real_distribution<double> u(-3, 3);
  for (int it = 0; it < 20; ++it) {
    std::vector<cd> coeffs(6);
    for (auto& x : coeffs) x = cd(u(rng), u(rng));
    auto roots = complex_roots(coeffs);
    cd sum = 0, prod = 1;
    for (auto z : roots) {
      sum += z;
      prod *= z;
    }
    CHECK(std::abs(sum + coeffs[4] / coeffs[5]) < 1e-8);
    CHECK(std::abs(prod + coeffs[0] / coeffs[5]) < 1e-8);  // (-1)^5 c0 / c5
  }
}
