#include "wordmaps/big.hpp"

#include "wordmaps/elimination.hpp"
#include "wordmaps/errors.hpp"

namespace wordmaps {

std::string to_string(BigVerdict v) { return v == BigVerdict::BigAt ? "BigAt" : "NotEstablished"; }

bool finite_common_zeros(const LaurentPoly& p, const LaurentPoly& q) {
  auto nonzero_constant = [](const LaurentPoly& f) { return f.is_constant() && !f.is_zero(); };
  if (nonzero_constant(p) || nonzero_constant(q)) return true;
  if (p.is_zero() || q.is_zero()) return false;
  if (!p.is_polynomial() || !q.is_polynomial()) throw std::invalid_argument("finite_common_zeros needs polynomials");
  // shared variable factor: both vanish on a coordinate line
  for (const auto& v : p.variables()) {
    if (!q.has_var(v)) continue;
    if (p.min_degree(v) > 0 && q.min_degree(v) > 0) return false;
  }
  return gcd(p, q).is_constant();
}

namespace {

const std::vector<std::string>& sucd() {
  static const std::vector<std::string> v{"s", "u", "C", "D"};
  return v;
}

// Finitely many common zeros of all polynomials in the list.
bool finite_set(const std::vector<const LaurentPoly*>& polys) {
  for (const auto* p : polys)
    if (p->is_constant() && !p->is_zero()) return true;
  for (std::size_t i = 0; i < polys.size(); ++i)
    for (std::size_t j = i + 1; j < polys.size(); ++j)
      if (finite_common_zeros(*polys[i], *polys[j])) return true;
  return false;
}

}  // namespace

BigReport big_slice(const TraceMap& tm, const Rational& a) {
  BigReport rep;
  rep.a = a;
  auto C = LaurentPoly::variable(sucd(), "C"), D = LaurentPoly::variable(sucd(), "D");
  auto slice = [&](const LaurentPoly& f) { return f.specialize({{"t", a}}).with_variables(sucd()); };
  rep.h1 = slice(tm.P) - 2 - C;
  rep.h2 = slice(tm.Q) - (C + 1) * a - D;
  int d1 = rep.h1.degree("u"), d2 = rep.h2.degree("u");
  if (d1 < 1 && d2 < 1) throw InapplicableError("degenerate elimination: neither trace polynomial involves u");

  // a vanishing resultant at s0 yields a common u-root once one leading coefficient survives
  int best_power = -1;
  for (const auto* h : {&rep.h1, &rep.h2}) {
    int d = h->degree("u");
    if (d < 1) continue;
    LaurentPoly lc = h->coefficient("u", d);
    if (!lc.is_monomial() || lc.depends_on("C") || lc.depends_on("D")) continue;
    int k = lc.degree("s");
    if (best_power < 0 || k < best_power) best_power = k;
  }
  if (best_power == 0) rep.root_mode = "any-root";
  else if (best_power > 0) rep.root_mode = "nonzero-root";

  rep.R = resultant(rep.h1, rep.h2, "u");
  for (auto& [e, p] : rep.R.coeff_split("s")) rep.levels.push_back({e, p});
  const std::size_t k = rep.levels.size();
  rep.pairwise.assign(k, std::vector<bool>(k, false));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      rep.pairwise[i][j] = rep.pairwise[j][i] = finite_common_zeros(rep.levels[i].p, rep.levels[j].p);

  if (rep.R.is_zero()) {
    rep.reason = "resultant vanishes identically";
    return rep;
  }
  if (rep.root_mode.empty()) {
    rep.reason = "no leading coefficient in u is a monomial in s";
    return rep;
  }
  if (rep.levels.front().exponent < 1) {
    rep.reason = "resultant does not involve s";
    return rep;
  }
  // R(., C, D) has a nonzero root unless at most one level survives at (C, D)
  bool nonzero_root_ok = true;
  for (std::size_t i = 0; i < k && nonzero_root_ok; ++i) {
    std::vector<const LaurentPoly*> rest;
    for (std::size_t j = 0; j < k; ++j)
      if (j != i) rest.push_back(&rep.levels[j].p);
    nonzero_root_ok = !rest.empty() && finite_set(rest);
  }
  if (nonzero_root_ok) {
    rep.verdict = BigVerdict::BigAt;
    rep.reason = "levels leave at most finitely many (C, D) without a nonzero s-root";
    return rep;
  }
  if (rep.root_mode == "any-root") {
    // any root will do: only the levels with e >= 1 must not all vanish
    std::vector<const LaurentPoly*> positive;
    for (const auto& l : rep.levels)
      if (l.exponent >= 1) positive.push_back(&l.p);
    if (finite_set(positive)) {
      rep.verdict = BigVerdict::BigAt;
      rep.reason = "positive s-levels vanish together at finitely many (C, D)";
      return rep;
    }
  }
  rep.reason = "common zeros of the s-levels are not shown to be finite";
  return rep;
}

BigReport big_slice(const Word& w, const Rational& a) { return big_slice(trace_polys(w), a); }

AlmostSurjectivityResult almost_surjectivity(const Word& w, const std::vector<Rational>& samples) {
  AlmostSurjectivityResult out;
  TraceMap tm = trace_polys(w);
  for (const auto& a : samples) {
    try {
      out.reports.push_back(big_slice(tm, a));
    } catch (const InapplicableError&) {
      continue;
    }
    if (out.reports.back().verdict == BigVerdict::BigAt) {
      out.established = true;
      out.witness = a;
      break;
    }
  }
  return out;
}

IterateCheck iterate_and_check(const Word& w, int n, const Rational& a, const IterateOptions& opts) {
  if (n < 1) throw std::invalid_argument("iterate_and_check needs n >= 1");
  IterateCheck out;
  out.n = n;
  out.a = a;
  out.base = big_slice(w, a);
  if (n == 1) {
    out.iterate_checked = true;
    if (out.base.verdict == BigVerdict::BigAt) out.method = "direct";
    out.direct = out.base;
    return out;
  }
  std::optional<TraceMap> tm;
  try {
    tm = psi_iterate(w, n, opts.max_terms);
  } catch (const SizeGuardError& e) {
    out.note = e.what();
  }
  if (tm) {
    // spot check against the substituted word at x = [[2, 1], [1, 1]], y = [[1, 1], [0, 1]]
    Word vn = iterate_word(w, n);
    RationalMatrix x(2, 1, 1, 1), y(1, 1, 0, 1);
    std::vector<Rational> pt{x.trace(), y.trace(), (x * y).trace()};
    out.iterate_checked = tm->P.eval(pt) == evaluate(vn, std::vector<RationalMatrix>{x, y}).trace();
    LaurentPoly p = tm->P.specialize({{"t", a}}), q = tm->Q.specialize({{"t", a}});
    int sylvester = std::max(p.degree("u"), 0) + std::max(q.degree("u"), 0);
    if (sylvester <= opts.max_sylvester) {
      out.direct = big_slice(*tm, a);
      if (out.direct->verdict == BigVerdict::BigAt) {
        out.method = "direct";
        return out;
      }
    } else {
      out.note = "Sylvester matrix of size " + std::to_string(sylvester) + " is over the limit";
    }
  }
  // the image of psi^n_a contains psi_a(C^2 \ N) for the finite N missed by psi^(n-1)_a
  if (out.base.verdict == BigVerdict::BigAt) out.method = "propagated";
  return out;
}

}  // namespace wordmaps
