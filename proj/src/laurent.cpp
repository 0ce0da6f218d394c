#include "wordmaps/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <climits>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace wordmaps {

int grlex_compare(const Exponents& a, const Exponents& b) {
  long da = std::accumulate(a.begin(), a.end(), 0L);
  long db = std::accumulate(b.begin(), b.end(), 0L);
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
  return 0;
}

namespace {

struct ExponentsHash {
  std::size_t operator()(const Exponents& e) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (int x : e) h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
  }
};

bool term_before(const Term& a, const Term& b) { return grlex_compare(a.exps, b.exps) > 0; }

const LaurentPoly::VarList& empty_vars() {
  static const LaurentPoly::VarList v = std::make_shared<const std::vector<std::string>>();
  return v;
}

bool same_vars(const LaurentPoly::VarList& a, const LaurentPoly::VarList& b) {
  return a == b || *a == *b;
}

}  // namespace

LaurentPoly::VarList LaurentPoly::make_vars(std::vector<std::string> vars) {
  if (vars.empty()) return empty_vars();
  for (std::size_t i = 0; i < vars.size(); ++i)
    for (std::size_t j = i + 1; j < vars.size(); ++j)
      if (vars[i] == vars[j]) throw std::invalid_argument("duplicate variable name '" + vars[i] + "'");
  return std::make_shared<const std::vector<std::string>>(std::move(vars));
}

LaurentPoly::LaurentPoly() : vars_(empty_vars()) {}

LaurentPoly::LaurentPoly(std::vector<std::string> vars) : vars_(make_vars(std::move(vars))) {}

LaurentPoly::LaurentPoly(const Rational& c) : vars_(empty_vars()) {
  if (c != 0) terms_.push_back({{}, c});
}

LaurentPoly::LaurentPoly(long c) : LaurentPoly(Rational(c)) {}

LaurentPoly::LaurentPoly(VarList vars, std::vector<Term> canonical_terms)
    : vars_(std::move(vars)), terms_(std::move(canonical_terms)) {}

LaurentPoly LaurentPoly::constant(const Rational& c, std::vector<std::string> vars) {
  LaurentPoly p(std::move(vars));
  if (c != 0) p.terms_.push_back({Exponents(p.num_vars(), 0), c});
  return p;
}

LaurentPoly LaurentPoly::variable(std::vector<std::string> vars, const std::string& name) {
  LaurentPoly p(std::move(vars));
  int idx = p.var_index(name);
  if (idx < 0) throw std::invalid_argument("unknown variable '" + name + "'");
  Exponents e(p.num_vars(), 0);
  e[idx] = 1;
  p.terms_.push_back({std::move(e), Rational(1)});
  return p;
}

LaurentPoly LaurentPoly::monomial(std::vector<std::string> vars, Exponents exps, const Rational& c) {
  LaurentPoly p(std::move(vars));
  if (exps.size() != p.num_vars()) throw std::invalid_argument("monomial: exponent count mismatch");
  if (c != 0) p.terms_.push_back({std::move(exps), c});
  return p;
}

LaurentPoly LaurentPoly::from_terms(VarList vars, std::vector<Term> terms) {
  if (!vars) vars = empty_vars();
  for (auto& t : terms) t.coeff.canonicalize();
  std::sort(terms.begin(), terms.end(), term_before);
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (t.exps.size() != vars->size()) throw std::invalid_argument("from_terms: exponent count mismatch");
    if (!out.empty() && out.back().exps == t.exps) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && out.back().coeff == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff == 0) out.pop_back();
  return LaurentPoly(std::move(vars), std::move(out));
}

bool LaurentPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  return std::all_of(terms_[0].exps.begin(), terms_[0].exps.end(), [](int e) { return e == 0; });
}

bool LaurentPoly::is_polynomial() const {
  for (const auto& t : terms_)
    for (int e : t.exps)
      if (e < 0) return false;
  return true;
}

Rational LaurentPoly::constant_term() const {
  for (const auto& t : terms_)
    if (std::all_of(t.exps.begin(), t.exps.end(), [](int e) { return e == 0; })) return t.coeff;
  return 0;
}

Rational LaurentPoly::to_constant() const {
  if (!is_constant()) throw std::domain_error("polynomial is not constant: " + to_string());
  return terms_.empty() ? Rational(0) : terms_[0].coeff;
}

int LaurentPoly::var_index(const std::string& name) const {
  const auto& v = *vars_;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] == name) return static_cast<int>(i);
  return -1;
}

int LaurentPoly::degree(const std::string& var) const {
  if (terms_.empty()) return INT_MIN;
  int idx = var_index(var);
  if (idx < 0) return 0;
  int d = INT_MIN;
  for (const auto& t : terms_) d = std::max(d, t.exps[idx]);
  return d;
}

int LaurentPoly::min_degree(const std::string& var) const {
  if (terms_.empty()) return INT_MIN;
  int idx = var_index(var);
  if (idx < 0) return 0;
  int d = INT_MAX;
  for (const auto& t : terms_) d = std::min(d, t.exps[idx]);
  return d;
}

int LaurentPoly::total_degree() const {
  if (terms_.empty()) return INT_MIN;
  return std::accumulate(terms_[0].exps.begin(), terms_[0].exps.end(), 0);
}

bool LaurentPoly::depends_on(const std::string& var) const {
  int idx = var_index(var);
  if (idx < 0) return false;
  return std::any_of(terms_.begin(), terms_.end(), [idx](const Term& t) { return t.exps[idx] != 0; });
}

const Term& LaurentPoly::leading_term() const {
  if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
  return terms_[0];
}

std::pair<LaurentPoly, LaurentPoly> LaurentPoly::unify(const LaurentPoly& a, const LaurentPoly& b) {
  std::vector<std::string> vars = *a.vars_;
  for (const auto& v : *b.vars_)
    if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
  auto shared = make_vars(vars);
  LaurentPoly ua = a.with_variables(vars);
  LaurentPoly ub = b.with_variables(vars);
  ua.vars_ = shared;
  ub.vars_ = shared;
  return {std::move(ua), std::move(ub)};
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.terms_.empty()) {
    if (!same_vars(vars_, o.vars_) && terms_.empty() && vars_->empty()) vars_ = o.vars_;
    return *this;
  }
  if (!same_vars(vars_, o.vars_)) {
    if (o.vars_->empty()) {
      return *this += LaurentPoly(vars_, {{Exponents(num_vars(), 0), o.terms_[0].coeff}});
    }
    if (vars_->empty()) {
      // Fast path: constant + polynomial over o's variables.
      auto c = constant_term();
      *this = o;
      if (c != 0) *this += LaurentPoly::constant(c, *o.vars_);
      return *this;
    }
    auto [a, b] = unify(*this, o);
    *this = std::move(a);
    return *this += b;
  }
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size()) {
      out.push_back(std::move(terms_[i++]));
    } else if (i == terms_.size()) {
      out.push_back(o.terms_[j++]);
    } else {
      int c = grlex_compare(terms_[i].exps, o.terms_[j].exps);
      if (c > 0) {
        out.push_back(std::move(terms_[i++]));
      } else if (c < 0) {
        out.push_back(o.terms_[j++]);
      } else {
        Rational s = terms_[i].coeff + o.terms_[j].coeff;
        if (s != 0) out.push_back({std::move(terms_[i].exps), std::move(s)});
        ++i;
        ++j;
      }
    }
  }
  terms_ = std::move(out);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.terms_.empty() || b.terms_.empty()) {
    if (same_vars(a.vars_, b.vars_)) return LaurentPoly(a.vars_, {});
    return LaurentPoly(LaurentPoly::unify(a, b).first.vars_, {});
  }
  if (!same_vars(a.vars_, b.vars_)) {
    if (a.is_constant() && a.vars_->empty()) return LaurentPoly(b).scale(a.constant_term());
    if (b.is_constant() && b.vars_->empty()) return LaurentPoly(a).scale(b.constant_term());
    auto [ua, ub] = LaurentPoly::unify(a, b);
    return ua * ub;
  }
  const std::size_t n = a.num_vars();
  if (b.terms_.size() == 1 || a.terms_.size() == 1) {
    // Monomial times polynomial keeps the term order.
    const LaurentPoly& mono = b.terms_.size() == 1 ? b : a;
    const LaurentPoly& other = b.terms_.size() == 1 ? a : b;
    const Term& m = mono.terms_[0];
    std::vector<Term> out;
    out.reserve(other.terms_.size());
    for (const auto& t : other.terms_) {
      Exponents e(n);
      for (std::size_t k = 0; k < n; ++k) e[k] = t.exps[k] + m.exps[k];
      out.push_back({std::move(e), t.coeff * m.coeff});
    }
    return LaurentPoly(a.vars_, std::move(out));
  }
  std::unordered_map<Exponents, Rational, ExponentsHash> acc;
  acc.reserve(a.terms_.size() * b.terms_.size());
  Exponents e(n);
  Rational prod;
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      for (std::size_t k = 0; k < n; ++k) e[k] = ta.exps[k] + tb.exps[k];
      mpq_mul(prod.get_mpq_t(), ta.coeff.get_mpq_t(), tb.coeff.get_mpq_t());
      auto it = acc.find(e);
      if (it == acc.end()) {
        acc.emplace(e, prod);
      } else {
        it->second += prod;
      }
    }
  }
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [ex, c] : acc)
    if (c != 0) out.push_back({ex, std::move(c)});
  std::sort(out.begin(), out.end(), term_before);
  return LaurentPoly(a.vars_, std::move(out));
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

LaurentPoly& LaurentPoly::scale(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

LaurentPoly& LaurentPoly::operator/=(const Rational& c) {
  if (c == 0) throw std::domain_error("division by zero");
  for (auto& t : terms_) t.coeff /= c;
  return *this;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
  if (same_vars(a.vars_, b.vars_)) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (a.terms_[i].exps != b.terms_[i].exps || a.terms_[i].coeff != b.terms_[i].coeff) return false;
    return true;
  }
  return (a - b).is_zero();
}

LaurentPoly LaurentPoly::inverse() const {
  if (terms_.size() != 1) throw std::domain_error("only monomials are invertible: " + to_string());
  Exponents e = terms_[0].exps;
  for (int& x : e) x = -x;
  return LaurentPoly(vars_, {{std::move(e), 1 / terms_[0].coeff}});
}

LaurentPoly LaurentPoly::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  if (terms_.size() == 1) {
    Exponents e = terms_[0].exps;
    for (int& x : e) x = static_cast<int>(x * k);
    Rational c;
    mpz_pow_ui(c.get_num_mpz_t(), terms_[0].coeff.get_num_mpz_t(), static_cast<unsigned long>(k));
    mpz_pow_ui(c.get_den_mpz_t(), terms_[0].coeff.get_den_mpz_t(), static_cast<unsigned long>(k));
    c.canonicalize();
    return LaurentPoly(vars_, {{std::move(e), std::move(c)}});
  }
  LaurentPoly result = LaurentPoly::constant(1, *vars_);
  LaurentPoly base = *this;
  while (k) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return result;
}

LaurentPoly LaurentPoly::with_variables(std::vector<std::string> vars) const {
  auto target = make_vars(std::move(vars));
  if (same_vars(vars_, target)) return LaurentPoly(target, terms_);
  std::vector<int> map(num_vars(), -1);
  for (std::size_t i = 0; i < num_vars(); ++i) {
    for (std::size_t j = 0; j < target->size(); ++j)
      if ((*vars_)[i] == (*target)[j]) map[i] = static_cast<int>(j);
  }
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Exponents e(target->size(), 0);
    for (std::size_t i = 0; i < num_vars(); ++i) {
      if (t.exps[i] == 0) continue;
      if (map[i] < 0) throw std::invalid_argument("with_variables: variable '" + (*vars_)[i] + "' is in use");
      e[map[i]] = t.exps[i];
    }
    out.push_back({std::move(e), t.coeff});
  }
  return from_terms(target, std::move(out));
}

LaurentPoly LaurentPoly::trimmed() const {
  std::vector<std::string> keep;
  for (const auto& v : *vars_)
    if (depends_on(v)) keep.push_back(v);
  return with_variables(keep);
}

LaurentPoly LaurentPoly::substitute(const std::string& var, const LaurentPoly& value) const {
  return substitute(std::map<std::string, LaurentPoly>{{var, value}});
}

LaurentPoly LaurentPoly::substitute(const std::map<std::string, LaurentPoly>& values) const {
  struct Sub {
    int index;
    const LaurentPoly* value;
    std::map<int, LaurentPoly> powers;
  };
  std::vector<Sub> subs;
  std::vector<std::string> rest;
  for (std::size_t i = 0; i < num_vars(); ++i) {
    auto it = values.find((*vars_)[i]);
    if (it != values.end()) {
      subs.push_back({static_cast<int>(i), &it->second, {}});
    } else {
      rest.push_back((*vars_)[i]);
    }
  }
  if (subs.empty()) return *this;
  LaurentPoly result(rest);
  // Group terms by the exponent pattern of the substituted variables so each
  // product of powers is formed once.
  std::map<std::vector<int>, std::vector<Term>> groups;
  std::vector<int> keep_idx;
  for (std::size_t i = 0; i < num_vars(); ++i)
    if (values.find((*vars_)[i]) == values.end()) keep_idx.push_back(static_cast<int>(i));
  for (const auto& t : terms_) {
    std::vector<int> key;
    for (auto& s : subs) key.push_back(t.exps[s.index]);
    Exponents e;
    for (int k : keep_idx) e.push_back(t.exps[k]);
    groups[key].push_back({std::move(e), t.coeff});
  }
  auto rest_vars = result.vars_;
  for (auto& [key, ts] : groups) {
    LaurentPoly factor = LaurentPoly::constant(1);
    for (std::size_t k = 0; k < subs.size(); ++k) {
      int e = key[k];
      if (e == 0) continue;
      auto& cache = subs[k].powers;
      auto it = cache.find(e);
      if (it == cache.end()) it = cache.emplace(e, subs[k].value->pow(e)).first;
      factor = factor * it->second;
    }
    result += from_terms(rest_vars, std::move(ts)) * factor;
  }
  return result;
}

LaurentPoly LaurentPoly::specialize(const std::map<std::string, Rational>& values) const {
  std::map<std::string, LaurentPoly> m;
  for (const auto& [k, v] : values) {
    if (!has_var(k)) continue;
    m.emplace(k, LaurentPoly(v));
  }
  LaurentPoly r = substitute(m);
  std::vector<std::string> rest;
  for (const auto& v : *vars_)
    if (values.find(v) == values.end()) rest.push_back(v);
  return r.with_variables(rest);
}

std::vector<std::pair<int, LaurentPoly>> LaurentPoly::coeff_split(const std::string& var) const {
  int idx = var_index(var);
  std::vector<std::string> rest;
  for (const auto& v : *vars_)
    if (v != var) rest.push_back(v);
  auto rest_vars = make_vars(rest);
  if (idx < 0) {
    if (terms_.empty()) return {};
    return {{0, LaurentPoly(rest_vars, terms_)}};
  }
  std::map<int, std::vector<Term>, std::greater<>> buckets;
  for (const auto& t : terms_) {
    Exponents e;
    e.reserve(t.exps.size() - 1);
    for (std::size_t i = 0; i < t.exps.size(); ++i)
      if (static_cast<int>(i) != idx) e.push_back(t.exps[i]);
    buckets[t.exps[idx]].push_back({std::move(e), t.coeff});
  }
  std::vector<std::pair<int, LaurentPoly>> out;
  for (auto& [e, ts] : buckets) out.emplace_back(e, from_terms(rest_vars, std::move(ts)));
  return out;
}

LaurentPoly LaurentPoly::coefficient(const std::string& var, int exponent) const {
  for (auto& [e, c] : coeff_split(var))
    if (e == exponent) return c;
  std::vector<std::string> rest;
  for (const auto& v : *vars_)
    if (v != var) rest.push_back(v);
  return LaurentPoly(rest);
}

std::vector<LaurentPoly> LaurentPoly::dense_coefficients(const std::string& var) const {
  auto split = coeff_split(var);
  std::vector<std::string> rest;
  for (const auto& v : *vars_)
    if (v != var) rest.push_back(v);
  if (split.empty()) return {LaurentPoly(rest)};
  if (split.back().first < 0) throw std::domain_error("negative exponent in '" + var + "'");
  std::vector<LaurentPoly> dense(split.front().first + 1, LaurentPoly(rest));
  for (auto& [e, c] : split) dense[e] = std::move(c);
  return dense;
}

LaurentPoly LaurentPoly::shifted(const Exponents& by) const {
  if (by.size() != num_vars()) throw std::invalid_argument("shifted: exponent count mismatch");
  std::vector<Term> out = terms_;
  for (auto& t : out)
    for (std::size_t i = 0; i < by.size(); ++i) t.exps[i] += by[i];
  return LaurentPoly(vars_, std::move(out));
}

Exponents LaurentPoly::min_exponents() const {
  Exponents m(num_vars(), 0);
  if (terms_.empty()) return m;
  m = terms_[0].exps;
  for (const auto& t : terms_)
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], t.exps[i]);
  return m;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    bool negative = t.coeff < 0;
    Rational mag = abs(t.coeff);
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    bool is_const = std::all_of(t.exps.begin(), t.exps.end(), [](int e) { return e == 0; });
    if (is_const) {
      os << mag.get_str();
      continue;
    }
    bool need_star = false;
    if (mag != 1) {
      os << mag.get_str();
      need_star = true;
    }
    for (std::size_t i = 0; i < t.exps.size(); ++i) {
      if (t.exps[i] == 0) continue;
      if (need_star) os << "*";
      os << (*vars_)[i];
      if (t.exps[i] != 1) os << "^" << t.exps[i];
      need_star = true;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Text parser

namespace {

class PolyParser {
 public:
  PolyParser(const std::string& text, std::vector<std::string> vars)
      : text_(text), vars_(std::move(vars)), fixed_(!vars_.empty()) {}

  LaurentPoly parse() {
    LaurentPoly p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character");
    std::vector<std::string> order = vars_;
    return p.with_variables(order);
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("polynomial parse error at " + std::to_string(pos_) + ": " + what);
  }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  LaurentPoly expr() {
    LaurentPoly acc;
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    LaurentPoly t = term();
    acc = negate ? -t : t;
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        break;
      }
    }
    return acc;
  }

  LaurentPoly term() {
    LaurentPoly acc = power();
    for (;;) {
      if (accept('*')) {
        acc *= power();
      } else if (accept('/')) {
        LaurentPoly d = power();
        if (!d.is_constant() || d.is_zero()) fail("division by a non-constant or zero");
        acc /= d.to_constant();
      } else {
        break;
      }
    }
    return acc;
  }

  long integer() {
    skip_ws();
    bool neg = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      neg = text_[pos_] == '-';
      ++pos_;
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer exponent");
    long v = std::stol(text_.substr(start, pos_ - start));
    return neg ? -v : v;
  }

  LaurentPoly power() {
    LaurentPoly base = atom();
    if (accept('^')) {
      bool paren = accept('(');
      long e = integer();
      if (paren && !accept(')')) fail("expected ')'");
      return base.pow(e);
    }
    return base;
  }

  LaurentPoly atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      LaurentPoly p = expr();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (c == '-') {
      ++pos_;
      return -power();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return LaurentPoly(parse_rational(text_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name = text_.substr(start, pos_ - start);
      if (std::find(vars_.begin(), vars_.end(), name) == vars_.end()) {
        if (fixed_) fail("unknown variable '" + name + "'");
        vars_.push_back(name);
      }
      return LaurentPoly::variable({name}, name);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  const std::string& text_;
  std::vector<std::string> vars_;
  bool fixed_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly parse_poly(const std::string& text, const std::vector<std::string>& vars) {
  return PolyParser(text, vars).parse();
}

}  // namespace wordmaps
