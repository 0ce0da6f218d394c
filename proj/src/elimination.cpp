#include "wordmaps/elimination.hpp"

#include <algorithm>
#include <map>

namespace wordmaps {

namespace {

struct GrlexDesc {
  bool operator()(const Exponents& a, const Exponents& b) const { return grlex_compare(a, b) > 0; }
};

std::vector<std::string> union_vars(const LaurentPoly& a, const LaurentPoly& b) {
  std::vector<std::string> vars = a.variables();
  for (const auto& v : b.variables())
    if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
  return vars;
}

LaurentPoly strip_monomial(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  Exponents m = p.min_exponents();
  for (auto& e : m) e = -e;
  return p.shifted(m);
}

// Division in Q[x_1..x_k] for polynomials a, b (b without monomial factor is
// not required). Returns nullopt when the remainder is nonzero.
std::optional<LaurentPoly> polynomial_divide(const LaurentPoly& a, const LaurentPoly& b) {
  std::map<Exponents, Rational, GrlexDesc> rem;
  for (const auto& t : a.terms()) rem.emplace(t.exps, t.coeff);
  const auto& bt = b.terms();
  const Term& lead = bt.front();
  Rational lead_inv = 1 / lead.coeff;
  std::vector<Term> quotient;
  while (!rem.empty()) {
    auto it = rem.begin();
    Exponents shift(it->first.size());
    for (std::size_t i = 0; i < shift.size(); ++i) {
      shift[i] = it->first[i] - lead.exps[i];
      if (shift[i] < 0) return std::nullopt;
    }
    Rational f = it->second * lead_inv;
    rem.erase(it);
    for (std::size_t k = 1; k < bt.size(); ++k) {
      Exponents e = bt[k].exps;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += shift[i];
      Rational delta = f * bt[k].coeff;
      auto [pos, inserted] = rem.emplace(std::move(e), -delta);
      if (!inserted) {
        pos->second -= delta;
        if (pos->second == 0) rem.erase(pos);
      }
    }
    quotient.push_back({std::move(shift), f});
  }
  return LaurentPoly::from_terms(a.var_list(), std::move(quotient));
}

int deg_in(const LaurentPoly& p, const std::string& v) { return p.is_zero() ? -1 : p.degree(v); }

LaurentPoly lc_in(const LaurentPoly& p, const std::string& v) { return p.coefficient(v, p.degree(v)); }

LaurentPoly var_power(const std::string& v, int k) { return LaurentPoly::monomial({v}, {k}); }

LaurentPoly prem(const LaurentPoly& a, const LaurentPoly& b, const std::string& v) {
  int db = deg_in(b, v);
  LaurentPoly lb = lc_in(b, v);
  LaurentPoly r = a;
  int e = deg_in(a, v) - db + 1;
  while (!r.is_zero() && deg_in(r, v) >= db) {
    int dr = deg_in(r, v);
    LaurentPoly lr = lc_in(r, v);
    r = lb * r - lr * var_power(v, dr - db) * b;
    --e;
  }
  if (e > 0) r = lb.pow(e) * r;
  return r;
}

LaurentPoly gcd_rec(const LaurentPoly& a0, const LaurentPoly& b0);

LaurentPoly content_in(const LaurentPoly& p, const std::string& v) {
  LaurentPoly c;
  for (const auto& [e, coeff] : p.coeff_split(v)) {
    c = c.is_zero() ? normalize_associate(coeff) : gcd_rec(c, coeff);
    if (c.is_constant()) break;
  }
  return c;
}

LaurentPoly gcd_rec(const LaurentPoly& a0, const LaurentPoly& b0) {
  if (a0.is_zero()) return normalize_associate(b0);
  if (b0.is_zero()) return normalize_associate(a0);
  LaurentPoly a = strip_monomial(a0), b = strip_monomial(b0);
  if (a.is_constant() || b.is_constant()) return LaurentPoly(1);
  std::string v;
  for (const auto& name : union_vars(a, b))
    if (a.depends_on(name) || b.depends_on(name)) {
      v = name;
      break;
    }
  if (!a.depends_on(v)) return gcd_rec(a, content_in(b, v));
  if (!b.depends_on(v)) return gcd_rec(content_in(a, v), b);

  LaurentPoly ca = content_in(a, v), cb = content_in(b, v);
  LaurentPoly c = gcd_rec(ca, cb);
  LaurentPoly A = exact_divide(a, ca), B = exact_divide(b, cb);
  if (deg_in(A, v) < deg_in(B, v)) std::swap(A, B);

  // subresultant remainder sequence
  LaurentPoly g = 1, h = 1;
  while (true) {
    int delta = deg_in(A, v) - deg_in(B, v);
    LaurentPoly r = prem(A, B, v);
    if (r.is_zero()) break;
    if (deg_in(r, v) == 0) return normalize_associate(c);
    A = B;
    B = exact_divide(r, g * h.pow(delta));
    g = lc_in(A, v);
    if (delta == 0) {
      // h stays
    } else if (delta == 1) {
      h = g;
    } else {
      h = exact_divide(g.pow(delta), h.pow(delta - 1));
    }
  }
  LaurentPoly pp = exact_divide(B, content_in(B, v));
  return normalize_associate(c * pp);
}

}  // namespace

LaurentPoly normalize_associate(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  LaurentPoly r = strip_monomial(p);
  return r / r.leading_coefficient();
}

std::optional<LaurentPoly> try_divide(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  auto vars = union_vars(a, b);
  LaurentPoly ua = a.with_variables(vars), ub = b.with_variables(vars);
  if (ua.is_zero()) return ua;
  Exponents ma = ua.min_exponents(), mb = ub.min_exponents();
  Exponents na(ma.size()), nb(mb.size()), shift(ma.size());
  for (std::size_t i = 0; i < ma.size(); ++i) {
    na[i] = -ma[i];
    nb[i] = -mb[i];
    shift[i] = ma[i] - mb[i];
  }
  auto q = polynomial_divide(ua.shifted(na), ub.shifted(nb));
  if (!q) return std::nullopt;
  return q->shifted(shift);
}

LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b) {
  auto q = try_divide(a, b);
  if (!q) throw std::domain_error("inexact division: (" + a.to_string() + ") / (" + b.to_string() + ")");
  return *q;
}

LaurentPoly resultant(const LaurentPoly& p0, const LaurentPoly& q0, const std::string& var) {
  auto vars = union_vars(p0, q0);
  if (std::find(vars.begin(), vars.end(), var) == vars.end()) vars.push_back(var);
  LaurentPoly p = p0.with_variables(vars), q = q0.with_variables(vars);
  std::vector<std::string> rest;
  for (const auto& v : vars)
    if (v != var) rest.push_back(v);
  if (p.is_zero() || q.is_zero()) return LaurentPoly(rest);
  auto pc = p.dense_coefficients(var), qc = q.dense_coefficients(var);
  const int m = static_cast<int>(pc.size()) - 1, n = static_cast<int>(qc.size()) - 1;
  if (m == 0 && n == 0) throw std::invalid_argument("resultant: neither polynomial involves '" + var + "'");
  if (m == 0) return pc[0].pow(n).with_variables(rest);
  if (n == 0) return qc[0].pow(m).with_variables(rest);

  const int N = m + n;
  std::vector<std::vector<LaurentPoly>> M(N, std::vector<LaurentPoly>(N, LaurentPoly(rest)));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k <= m; ++k) M[i][i + k] = pc[m - k];
  for (int i = 0; i < m; ++i)
    for (int k = 0; k <= n; ++k) M[n + i][i + k] = qc[n - k];

  LaurentPoly prev = 1;
  bool negate = false;
  for (int k = 0; k + 1 < N; ++k) {
    if (M[k][k].is_zero()) {
      int r = k + 1;
      while (r < N && M[r][k].is_zero()) ++r;
      if (r == N) return LaurentPoly(rest);
      std::swap(M[k], M[r]);
      negate = !negate;
    }
    for (int i = k + 1; i < N; ++i) {
      for (int j = k + 1; j < N; ++j) {
        LaurentPoly num = M[i][j] * M[k][k] - M[i][k] * M[k][j];
        M[i][j] = prev.is_constant() ? num / prev.to_constant() : exact_divide(num, prev);
      }
      M[i][k] = LaurentPoly(rest);
    }
    prev = M[k][k];
  }
  LaurentPoly det = M[N - 1][N - 1];
  if (negate) det = -det;
  return det.with_variables(rest);
}

LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b) {
  auto vars = union_vars(a, b);
  return gcd_rec(a.with_variables(vars), b.with_variables(vars)).with_variables(vars);
}

DivisionCheck gcd_divides(const LaurentPoly& p, const LaurentPoly& q) {
  if (p.is_zero()) throw std::domain_error("division by the zero polynomial");
  DivisionCheck out;
  out.gcd = gcd(p, q);
  out.quotient = try_divide(q, p);
  out.divides = out.quotient.has_value();
  return out;
}

}  // namespace wordmaps
