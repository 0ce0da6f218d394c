#include "wordmaps/magnus.hpp"

#include <mutex>
#include <numeric>

#include "wordmaps/errors.hpp"

namespace wordmaps {

std::vector<std::string> t_variables(int n) {
  std::vector<std::string> v;
  for (int i = 1; i <= n; ++i) v.push_back("t" + std::to_string(i));
  return v;
}

std::vector<std::string> s_variables(int n) {
  std::vector<std::string> v;
  for (int i = 1; i <= n; ++i) v.push_back("s" + std::to_string(i));
  return v;
}

STMatrix STMatrix::identity(int n) { return {Exponents(n, 0), LaurentPoly(t_variables(n))}; }

STMatrix STMatrix::generator(int n, int index) {
  STMatrix m = identity(n);
  m.kappa[index - 1] = 1;
  m.ell = LaurentPoly::constant(1, t_variables(n));
  return m;
}

LaurentPoly STMatrix::kappa_poly() const {
  return LaurentPoly::monomial(t_variables(static_cast<int>(kappa.size())), kappa);
}

PolyMatrix STMatrix::matrix() const {
  LaurentPoly k = kappa_poly();
  return {k, LaurentPoly(ell.variables()), ell, k.inverse()};
}

STMatrix STMatrix::inverse() const {
  Exponents neg = kappa;
  for (auto& e : neg) e = -e;
  return {neg, -ell};
}

STMatrix operator*(const STMatrix& a, const STMatrix& b) {
  // [[k1,0],[l1,1/k1]] [[k2,0],[l2,1/k2]] = [[k1 k2, 0], [l1 k2 + l2 / k1, 1/(k1 k2)]]
  Exponents k = a.kappa, neg = a.kappa;
  for (std::size_t i = 0; i < k.size(); ++i) {
    k[i] += b.kappa[i];
    neg[i] = -neg[i];
  }
  return {k, a.ell.shifted(b.kappa) + b.ell.shifted(neg)};
}

STMatrix mu1_image(const Word& w) {
  const int n = w.num_generators();
  std::vector<STMatrix> gens, invs;
  for (int i = 1; i <= n; ++i) {
    gens.push_back(STMatrix::generator(n, i));
    invs.push_back(gens.back().inverse());
  }
  STMatrix result = STMatrix::identity(n);
  for (const auto& s : w.syllables()) {
    const STMatrix& g = s.exp > 0 ? gens[s.gen - 1] : invs[s.gen - 1];
    for (long k = 0; k < std::labs(s.exp); ++k) result = result * g;
  }
  return result;
}

namespace {

PolyMatrix lower_generator(const std::vector<std::string>& vars, int i, const LaurentPoly& entry) {
  LaurentPoly t = LaurentPoly::variable(vars, "t" + std::to_string(i));
  return {t, LaurentPoly(vars), entry.with_variables(vars), t.inverse()};
}

}  // namespace

PolyMatrix mu_w_image(const Word& w) {
  const int n = w.num_generators();
  auto vars = t_variables(n);
  for (auto& s : s_variables(n)) vars.push_back(s);
  std::vector<PolyMatrix> images;
  for (int i = 1; i <= n; ++i)
    images.push_back(lower_generator(vars, i, LaurentPoly::variable(vars, "s" + std::to_string(i))));
  return evaluate(w, images);
}

PolyMatrix mu_b_image(const Word& w, const std::vector<long>& b) {
  const int n = w.num_generators();
  if (static_cast<int>(b.size()) != n) throw std::invalid_argument("need one b_i per generator");
  auto vars = t_variables(n);
  std::vector<PolyMatrix> images;
  for (int i = 1; i <= n; ++i) {
    if (b[i - 1] == 0) throw std::invalid_argument("b-vector entries must be nonzero");
    images.push_back(lower_generator(vars, i, LaurentPoly::constant(b[i - 1], vars)));
  }
  return evaluate(w, images);
}

LaurentPoly obstruction_polynomial(const Word& w) {
  for (long s : exponent_sums(w))
    if (s != 0) throw InapplicableError("word is not in the commutator subgroup (nonzero exponent sum)");
  return mu1_image(w).ell;
}

std::string to_string(DerivedLevel level) {
  switch (level) {
    case DerivedLevel::NotInF1: return "NotInF1";
    case DerivedLevel::InF1NotF2: return "InF1NotF2";
    case DerivedLevel::InF2: return "InF2";
  }
  return "?";
}

LevelInfo classify_derived_level(const Word& w) {
  for (long s : exponent_sums(w))
    if (s != 0) return {DerivedLevel::NotInF1, std::nullopt};
  LaurentPoly L = mu1_image(w).ell;
  return {L.is_zero() ? DerivedLevel::InF2 : DerivedLevel::InF1NotF2, L};
}

Rational height_sequence(std::size_t index) {
  static std::mutex mu;
  static std::vector<Rational> seq;
  static long height = 0;
  std::lock_guard<std::mutex> lock(mu);
  while (seq.size() <= index) {
    ++height;
    std::vector<Rational> shell;
    if (height == 1) {
      shell.push_back(1);
    } else {
      for (long q = 1; q < height; ++q) {
        if (std::gcd(height, q) != 1) continue;
        shell.push_back(frac(height, q));
        shell.push_back(frac(q, height));
      }
    }
    for (const auto& r : shell) seq.push_back(r);
    for (const auto& r : shell) seq.push_back(-r);
  }
  return seq[index];
}

std::vector<Rational> find_nonvanishing_point(const LaurentPoly& L) {
  if (L.is_zero()) throw std::invalid_argument("the zero polynomial vanishes everywhere");
  const std::size_t n = L.num_vars();
  if (n == 0) return {};
  // shell K: index tuples in [0, K)^n with at least one coordinate equal to K-1
  for (std::size_t K = 1;; ++K) {
    std::vector<std::size_t> idx(n, 0);
    while (true) {
      bool on_shell = false;
      for (auto i : idx) on_shell = on_shell || i + 1 == K;
      if (on_shell) {
        std::vector<Rational> pt;
        for (auto i : idx) pt.push_back(height_sequence(i));
        if (L.eval(pt) != 0) return pt;
      }
      std::size_t pos = n;
      while (pos > 0) {
        --pos;
        if (++idx[pos] < K) break;
        idx[pos] = 0;
        if (pos == 0) {
          pos = n + 1;
          break;
        }
      }
      if (pos == n + 1) break;
    }
  }
}

UnipotentWitness unipotent_witness(const Word& w, const RationalMatrix& X, const std::optional<std::vector<Rational>>& a) {
  if (X.trace() != 2 || X.det() != 1) throw std::invalid_argument("target must have trace 2 and determinant 1");
  const int n = w.num_generators();
  auto info = classify_derived_level(w);
  if (info.level != DerivedLevel::InF1NotF2)
    throw InapplicableError("unipotent witness needs a word in F^(1) \\ F^(2), got " + to_string(info.level));
  UnipotentWitness out;
  if (X == RationalMatrix::identity()) {
    out.a.assign(n, Rational(1));
    out.c = 0;
    out.S = RationalMatrix::identity();
    out.Z.assign(n, RationalMatrix::identity());
    return out;
  }
  const LaurentPoly& L = *info.obstruction;
  out.a = a ? *a : find_nonvanishing_point(L);
  if (static_cast<int>(out.a.size()) != n) throw std::invalid_argument("need one value a_i per generator");
  for (const auto& v : out.a)
    if (v == 0) throw std::invalid_argument("a_i must be nonzero");
  out.c = L.eval(out.a);
  if (out.c == 0) throw std::invalid_argument("the obstruction polynomial vanishes at the chosen point");

  // N = X - I is nilpotent of rank one: take a nonzero column N e_j = v, then
  // N (c/alpha) e_j = c (v/alpha) and N v = 0, so S = [(c/alpha) e_j, v/alpha].
  RationalMatrix N = X - RationalMatrix::identity();
  int j = (N(0, 0) != 0 || N(1, 0) != 0) ? 0 : 1;
  Rational v0 = N(0, j), v1 = N(1, j);
  Rational alpha = v0 != 0 ? v0 : v1;
  Rational s = out.c / alpha;
  out.S = RationalMatrix(j == 0 ? s : Rational(0), v0 / alpha, j == 1 ? s : Rational(0), v1 / alpha);
  if (out.S.det() == 0) throw VerificationError("singular conjugator in unipotent witness");
  RationalMatrix Sinv = inverse(out.S);
  for (const auto& ai : out.a) out.Z.push_back(out.S * RationalMatrix(ai, 0, 1, 1 / ai) * Sinv);
  if (evaluate(w, out.Z) != X) throw VerificationError("unipotent witness failed exact verification");
  return out;
}

}  // namespace wordmaps
