#include "wordmaps/word.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <set>

namespace wordmaps {

namespace {

void push_syllable(std::vector<Syllable>& out, int gen, long exp) {
  if (exp == 0) return;
  if (!out.empty() && out.back().gen == gen) {
    out.back().exp += exp;
    if (out.back().exp == 0) out.pop_back();
  } else {
    out.push_back({gen, exp});
  }
}

std::string generator_name(int n, int gen) {
  if (n <= 2) return gen == 1 ? "x" : "y";
  return "g" + std::to_string(gen);
}

}  // namespace

Word::Word(int num_generators) : n_(num_generators) {
  if (num_generators < 1) throw std::invalid_argument("a word needs at least one generator");
}

Word::Word(int num_generators, const std::vector<Syllable>& syllables) : Word(num_generators) {
  for (const auto& s : syllables) {
    if (s.gen < 1 || s.gen > n_) throw std::invalid_argument("generator index out of range");
    push_syllable(syl_, s.gen, s.exp);
  }
}

Word Word::generator(int num_generators, int index, long exp) {
  return Word(num_generators, {{index, exp}});
}

long Word::length() const {
  long total = 0;
  for (const auto& s : syl_) total += std::labs(s.exp);
  return total;
}

Word Word::inverse() const {
  Word r(n_);
  r.syl_.reserve(syl_.size());
  for (auto it = syl_.rbegin(); it != syl_.rend(); ++it) r.syl_.push_back({it->gen, -it->exp});
  return r;
}

Word Word::power(long k) const {
  Word base = k >= 0 ? *this : inverse();
  Word result(n_);
  for (long i = 0; i < std::labs(k); ++i) result = result * base;
  return result;
}

Word operator*(const Word& a, const Word& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("cannot multiply words over different free groups");
  Word r = a;
  for (const auto& s : b.syl_) push_syllable(r.syl_, s.gen, s.exp);
  return r;
}

std::string Word::to_string() const {
  if (syl_.empty()) return "1";
  std::string out;
  for (const auto& s : syl_) {
    out += generator_name(n_, s.gen);
    if (s.exp != 1) out += "^" + std::to_string(s.exp);
  }
  return out;
}

std::string format_word(const Word& w) { return w.to_string(); }

namespace {

class WordParser {
 public:
  WordParser(const std::string& text, int n) : text_(text), n_(n) {}

  Word parse() {
    skip_ws();
    Word w = word();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return w;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw WordParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  void expect(char c) {
    if (!at(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  Word word() {
    Word w(n_);
    if (at('1')) {
      ++pos_;
      return w;
    }
    while (true) {
      skip_ws();
      if (pos_ >= text_.size()) break;
      char c = text_[pos_];
      if (c != 'x' && c != 'y' && c != 'g' && c != '(' && c != '[') break;
      w = w * factor();
    }
    return w;
  }

  Word factor() {
    Word a = atom();
    if (at('^')) {
      ++pos_;
      a = a.power(integer());
    }
    return a;
  }

  long integer() {
    skip_ws();
    std::size_t start = pos_;
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      ++pos_;
    }
    std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (digits == pos_) {
      pos_ = start;
      fail("expected an integer exponent");
    }
    long v = std::stol(text_.substr(digits, pos_ - digits));
    return negative ? -v : v;
  }

  Word atom() {
    skip_ws();
    std::size_t start = pos_;
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Word w = word();
      expect(')');
      return w;
    }
    if (c == '[') {
      ++pos_;
      Word u = word();
      expect(',');
      Word v = word();
      expect(']');
      return commutator(u, v);
    }
    ++pos_;
    int gen = 0;
    if (c == 'x') {
      gen = 1;
    } else if (c == 'y') {
      gen = 2;
    } else {
      std::size_t d = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (d == pos_) {
        pos_ = start;
        fail("expected digits after 'g'");
      }
      gen = std::stoi(text_.substr(d, pos_ - d));
    }
    if (gen < 1 || gen > n_) {
      pos_ = start;
      fail("generator out of range for " + std::to_string(n_) + " generators");
    }
    return Word::generator(n_, gen);
  }

  const std::string& text_;
  int n_;
  std::size_t pos_ = 0;
};

}  // namespace

Word parse_word(const std::string& text, int num_generators) {
  return WordParser(text, num_generators).parse();
}

Word commutator(const Word& u, const Word& v) { return u * v * u.inverse() * v.inverse(); }

Word substitute(const Word& w, const std::vector<Word>& images) {
  if (static_cast<int>(images.size()) != w.num_generators())
    throw std::invalid_argument("substitute: need one image per generator");
  Word result(images.empty() ? 1 : images[0].num_generators());
  for (const auto& s : w.syllables()) result = result * images[s.gen - 1].power(s.exp);
  return result;
}

std::vector<long> exponent_sums(const Word& w) {
  std::vector<long> sums(w.num_generators(), 0);
  for (const auto& s : w.syllables()) sums[s.gen - 1] += s.exp;
  return sums;
}

Word engel_word(int n) {
  if (n < 1) throw std::invalid_argument("Engel words start at n = 1");
  Word x = Word::generator(2, 1), y = Word::generator(2, 2);
  Word e = commutator(x, y);
  for (int k = 1; k < n; ++k) e = commutator(e, y);
  return e;
}

CyclicReduction cyclic_reduce(const Word& w) {
  std::vector<Syllable> s = w.syllables();
  std::vector<Syllable> conj;
  std::size_t lo = 0, hi = s.size();
  // peel matching ends; after the loop at most one of them can still share a generator
  while (hi - lo >= 2 && s[lo].gen == s[hi - 1].gen) {
    long a = s[lo].exp, b = s[hi - 1].exp;
    if (a == -b) {
      conj.push_back(s[lo]);
      ++lo;
      --hi;
      continue;
    }
    // g^a ... g^b: conjugate by g^a, leaving g^(a+b) at the end
    conj.push_back({s[lo].gen, a});
    s[hi - 1].exp = a + b;
    ++lo;
    break;
  }
  std::vector<Syllable> core(s.begin() + lo, s.begin() + hi);
  return {Word(w.num_generators(), core), Word(w.num_generators(), conj)};
}

ProperPower proper_power_root(const Word& w) {
  if (w.is_identity()) return {w, 1};
  auto cr = cyclic_reduce(w);
  const auto& s = cr.core.syllables();
  const int n = w.num_generators();
  if (s.size() == 1) {
    long m = s[0].exp;
    Word root = cr.conjugator * Word::generator(n, s[0].gen, m > 0 ? 1 : -1) * cr.conjugator.inverse();
    return {root, std::labs(m)};
  }
  // smallest period of the syllable sequence via the KMP failure function
  std::size_t len = s.size();
  std::vector<std::size_t> fail(len + 1, 0);
  for (std::size_t i = 1, k = 0; i < len; ++i) {
    while (k > 0 && !(s[i] == s[k])) k = fail[k];
    if (s[i] == s[k]) ++k;
    fail[i + 1] = k;
  }
  std::size_t period = len - fail[len];
  if (len % period != 0) period = len;
  Word root_core(n, std::vector<Syllable>(s.begin(), s.begin() + static_cast<long>(period)));
  Word root = cr.conjugator * root_core * cr.conjugator.inverse();
  return {root, static_cast<long>(len / period)};
}

std::string to_string(Transform t) {
  switch (t) {
    case Transform::CyclicShift: return "cyclic-shift";
    case Transform::SwapGenerators: return "swap-generators";
    case Transform::InvertWord: return "invert-word";
    case Transform::InvertGenerator: return "invert-generator";
  }
  return "?";
}

Word swap_generators(const Word& w) {
  if (w.num_generators() != 2) throw std::invalid_argument("swap_generators needs a two-generator word");
  std::vector<Syllable> s = w.syllables();
  for (auto& x : s) x.gen = 3 - x.gen;
  return Word(2, s);
}

Word invert_generator(const Word& w, int gen) {
  std::vector<Syllable> s = w.syllables();
  for (auto& x : s)
    if (x.gen == gen) x.exp = -x.exp;
  return Word(w.num_generators(), s);
}

Word TwoLetterForm::word() const {
  std::vector<Syllable> s;
  for (std::size_t i = 0; i < a.size(); ++i) {
    s.push_back({1, a[i]});
    s.push_back({2, b[i]});
  }
  return Word(2, s);
}

long TwoLetterForm::sum_a() const {
  long t = 0;
  for (long v : a) t += v;
  return t;
}

long TwoLetterForm::sum_b() const {
  long t = 0;
  for (long v : b) t += v;
  return t;
}

TwoLetterForm normalize_two_letter(const Word& w) {
  if (w.num_generators() != 2) throw std::invalid_argument("expected a two-generator word");
  if (w.is_identity()) throw std::invalid_argument("the identity word has no two-letter form");
  auto cr = cyclic_reduce(w);
  auto s = cr.core.syllables();
  if (s.size() == 1) throw PurePowerError(s[0].gen, s[0].exp);
  TwoLetterForm f;
  f.conjugator = cr.conjugator;
  if (!cr.conjugator.is_identity()) f.transforms.push_back(Transform::CyclicShift);
  if (s[0].gen == 2) {
    // w' = y^b * rest = y^b * (rest * y^b) * y^-b
    Syllable first = s[0];
    s.erase(s.begin());
    s.push_back(first);
    f.conjugator = f.conjugator * Word::generator(2, 2, first.exp);
    if (f.transforms.empty()) f.transforms.push_back(Transform::CyclicShift);
  }
  for (std::size_t i = 0; i + 1 < s.size(); i += 2) {
    f.a.push_back(s[i].exp);
    f.b.push_back(s[i + 1].exp);
  }
  return f;
}

std::vector<OrbitMember> transform_orbit(const Word& w) {
  if (w.num_generators() != 2) throw std::invalid_argument("transform_orbit needs a two-generator word");
  std::vector<OrbitMember> out;
  std::set<std::string> seen;
  for (int swap = 0; swap < 2; ++swap)
    for (int ix = 0; ix < 2; ++ix)
      for (int iy = 0; iy < 2; ++iy)
        for (int inv = 0; inv < 2; ++inv) {
          Word v = w;
          std::vector<Transform> ts;
          if (swap) {
            v = swap_generators(v);
            ts.push_back(Transform::SwapGenerators);
          }
          if (ix) {
            v = invert_generator(v, 1);
            ts.push_back(Transform::InvertGenerator);
          }
          if (iy) {
            v = invert_generator(v, 2);
            ts.push_back(Transform::InvertGenerator);
          }
          if (inv) {
            v = v.inverse();
            ts.push_back(Transform::InvertWord);
          }
          if (seen.insert(v.to_string()).second) out.push_back({v, ts});
        }
  return out;
}

std::string to_string(const RationalMatrix& m) {
  return "[[" + to_string(m.e[0]) + ", " + to_string(m.e[1]) + "], [" + to_string(m.e[2]) + ", " +
         to_string(m.e[3]) + "]]";
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  double m = 0;
  for (int i = 0; i < 4; ++i) m = std::max(m, std::abs(a.e[i] - b.e[i]));
  return m;
}

}  // namespace wordmaps
