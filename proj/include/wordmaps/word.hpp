#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "wordmaps/matrix2.hpp"

namespace wordmaps {

/// One block g_i^m of a word; generator indices are 1-based.
struct Syllable {
  int gen;
  long exp;
  friend bool operator==(const Syllable& a, const Syllable& b) { return a.gen == b.gen && a.exp == b.exp; }
};

/// Freely reduced element of the free group on `num_generators` letters.
///
/// Adjacent syllables always have distinct generators and nonzero exponents;
/// the empty syllable list is the identity. Generators print as x, y when
/// n <= 2 and as g1..gn otherwise.
class Word {
 public:
  explicit Word(int num_generators = 2);
  Word(int num_generators, const std::vector<Syllable>& syllables);

  static Word generator(int num_generators, int index, long exp = 1);

  int num_generators() const { return n_; }
  const std::vector<Syllable>& syllables() const { return syl_; }
  bool is_identity() const { return syl_.empty(); }
  /// Number of letters, i.e. the sum of |exponent|.
  long length() const;

  Word inverse() const;
  Word power(long k) const;
  friend Word operator*(const Word& a, const Word& b);
  friend bool operator==(const Word& a, const Word& b) { return a.n_ == b.n_ && a.syl_ == b.syl_; }
  friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }

  std::string to_string() const;

 private:
  int n_;
  std::vector<Syllable> syl_;
};

class WordParseError : public std::invalid_argument {
 public:
  WordParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Grammar (whitespace ignored):
///   word = "1" | { factor } ;  factor = atom [ "^" integer ] ;
///   atom = generator | "(" word ")" | "[" word "," word "]" ;
///   generator = "x" | "y" | "g" digits ;  integer = ["-"] digits .
Word parse_word(const std::string& text, int num_generators = 2);
std::string format_word(const Word& w);

/// [u, v] = u v u^-1 v^-1. Basic commutators are w_{n,m} = [x^n, y^m].
Word commutator(const Word& u, const Word& v);
/// Replaces generator i by images[i-1]; the result lives in the images' group.
Word substitute(const Word& w, const std::vector<Word>& images);

/// Signed exponent sum of each generator; all zero iff w is in the commutator subgroup.
std::vector<long> exponent_sums(const Word& w);

/// e_1 = [x, y], e_{k+1} = [e_k, y].
Word engel_word(int n);

/// w = conjugator * core * conjugator^-1 with core cyclically reduced.
struct CyclicReduction {
  Word core;
  Word conjugator;
};
CyclicReduction cyclic_reduce(const Word& w);

/// Maximal k with w = root^k; the root is not itself a proper power.
struct ProperPower {
  Word root;
  long k;
};
ProperPower proper_power_root(const Word& w);

enum class Transform { CyclicShift, SwapGenerators, InvertWord, InvertGenerator };
std::string to_string(Transform t);

Word swap_generators(const Word& w);
Word invert_generator(const Word& w, int gen);

/// x^{a_1} y^{b_1} ... x^{a_k} y^{b_k} together with how it was reached.
struct TwoLetterForm {
  std::vector<long> a;
  std::vector<long> b;
  /// Transforms applied, in order. Only CyclicShift is produced by
  /// normalize_two_letter; the others are recorded by transform_orbit.
  std::vector<Transform> transforms;
  /// original-after-other-transforms = conjugator * word() * conjugator^-1.
  Word conjugator{2};

  Word word() const;
  long sum_a() const;
  long sum_b() const;
};

class PurePowerError : public std::invalid_argument {
 public:
  PurePowerError(int gen, long exp)
      : std::invalid_argument("word is a pure power of one generator"), gen_(gen), exp_(exp) {}
  int generator() const { return gen_; }
  long exponent() const { return exp_; }

 private:
  int gen_;
  long exp_;
};

/// Cyclically reduces a nontrivial two-generator word and rotates it to
/// start with an x-syllable. Throws PurePowerError for g^m.
TwoLetterForm normalize_two_letter(const Word& w);

/// Variant of a two-letter word under a combination of generator swap,
/// generator inversions and word inversion. The image of the word map is
/// the same for all of them (up to inversion of the whole image).
struct OrbitMember {
  Word word;
  std::vector<Transform> transforms;
};
std::vector<OrbitMember> transform_orbit(const Word& w);

/// Product of the generator images with negative exponents using inverses.
template <class T>
Matrix2<T> evaluate(const Word& w, const std::vector<Matrix2<T>>& images) {
  if (static_cast<int>(images.size()) != w.num_generators())
    throw std::invalid_argument("evaluate: need one image per generator");
  std::vector<Matrix2<T>> inverses(images.size());
  std::vector<bool> have_inverse(images.size(), false);
  Matrix2<T> result = Matrix2<T>::identity();
  for (const auto& s : w.syllables()) {
    const auto& img = images[s.gen - 1];
    if (s.exp < 0 && !have_inverse[s.gen - 1]) {
      inverses[s.gen - 1] = inverse(img);
      have_inverse[s.gen - 1] = true;
    }
    result = result * power(img, s.exp, s.exp < 0 ? &inverses[s.gen - 1] : nullptr);
  }
  return result;
}

}  // namespace wordmaps
