#include <algorithm>
#include <random>

#include "doctest.h"
#include "test_support.hpp"
#include "wordmaps/word.hpp"

using namespace wordmaps;
using namespace testing_support;

TEST_CASE("parsing and formatting") {
  CHECK(parse_word("[x,y]").to_string() == "xyx^-1y^-1");
  CHECK(parse_word("x y y^-1 x").to_string() == "x^2");
  CHECK(parse_word("1").is_identity());
  CHECK(parse_word("  ").is_identity());
  CHECK(parse_word("(xy)^-2").to_string() == "y^-1x^-1y^-1x^-1");
  CHECK(parse_word("g1 g3^2 g2", 3).to_string() == "g1g3^2g2");
  CHECK(parse_word("x^0 y").to_string() == "y");
}

TEST_CASE("parse errors carry a position") {
  try {
    parse_word("x y z");
    FAIL("expected a parse error");
  } catch (const WordParseError& e) {
    CHECK(e.position() == 4);
  }
  CHECK_THROWS_AS(parse_word("g3", 2), WordParseError);
  CHECK_THROWS_AS(parse_word("[x,y"), WordParseError);
  CHECK_THROWS_AS(parse_word("x^"), WordParseError);
  CHECK_THROWS_AS(parse_word("(x"), WordParseError);
}

TEST_CASE("the double commutator word from its letter expansion") {
  std::vector<int> x{1}, y{2};
  auto c = commutator_letters(x, y);
  auto v = commutator_letters(commutator_letters(x, c), commutator_letters(y, c));
  Word w = parse_word("[[x,[x,y]],[y,[x,y]]]");
  CHECK(word_letters(w) == v);
  CHECK(static_cast<int>(w.syllables().size()) == syllable_count(v));
  CHECK(w.length() == 28);
  CHECK(w.syllables().size() == 26);
}

TEST_CASE("format and parse round trip on random words") {
  std::mt19937 rng(1);
  for (int it = 0; it < 200; ++it) {
    int n = 2 + it % 3;
    Word w = random_word(rng, n, 30);
    CHECK(parse_word(w.to_string(), n) == w);
  }
}

TEST_CASE("free reduction does not depend on cancellation order") {
  std::mt19937 rng(2);
  for (int it = 0; it < 100; ++it) {
    Word u = random_word(rng, 2, 8), v = random_word(rng, 2, 8);
    auto letters = word_letters(u);
    auto vl = word_letters(v), vi = invert_letters(vl);
    // u v v^-1 with v spliced at a random point still reduces to u
    std::uniform_int_distribution<std::size_t> pos(0, letters.size());
    std::size_t p = pos(rng);
    std::vector<int> padded(letters.begin(), letters.begin() + static_cast<long>(p));
    padded.insert(padded.end(), vl.begin(), vl.end());
    padded.insert(padded.end(), vi.begin(), vi.end());
    padded.insert(padded.end(), letters.begin() + static_cast<long>(p), letters.end());
    std::vector<Syllable> syl;
    for (int l : padded) syl.push_back({std::abs(l), l > 0 ? 1 : -1});
    CHECK(Word(2, syl) == u);
    CHECK(Word(2, u.syllables()) == u);
  }
}

TEST_CASE("word algebra") {
  Word x = Word::generator(2, 1), y = Word::generator(2, 2);
  CHECK((x * y).inverse().to_string() == "y^-1x^-1");
  CHECK(commutator(x, y).to_string() == "xyx^-1y^-1");
  CHECK(x.power(0).is_identity());
  CHECK((x * y).power(3).to_string() == "xyxyxy");
  CHECK_THROWS(x * Word::generator(3, 1));

  Word w = parse_word("[y x y^-1, x^-1]");
  Word v2 = substitute(w, {w, y});
  CHECK(v2 == parse_word("[y (" + w.to_string() + ") y^-1, (" + w.to_string() + ")^-1]"));
}

TEST_CASE("exponent sums") {
  CHECK(exponent_sums(parse_word("[x,y]")) == std::vector<long>{0, 0});
  CHECK(exponent_sums(parse_word("x^2y^3x")) == std::vector<long>{3, 3});
  CHECK(exponent_sums(engel_word(3)) == std::vector<long>{0, 0});
  std::mt19937 rng(3);
  for (int it = 0; it < 50; ++it) {
    Word u = random_word(rng, 3, 10), v = random_word(rng, 3, 10);
    auto su = exponent_sums(u), sv = exponent_sums(v), suv = exponent_sums(u * v);
    for (int i = 0; i < 3; ++i) CHECK(suv[i] == su[i] + sv[i]);
  }
}

TEST_CASE("Engel words") {
  CHECK(engel_word(1) == parse_word("xyx^-1y^-1"));
  CHECK(engel_word(2) == parse_word("[[x,y],y]"));
  std::vector<int> e1{1, 2, -1, -2};
  auto e2 = reduce_letters([&] {
    std::vector<int> l = e1;
    for (int c : std::vector<int>{2, 2, 1, -2, -1, -2}) l.push_back(c);
    return l;
  }());
  CHECK(word_letters(engel_word(2)) == e2);
  CHECK(e2.size() == 8);
  CHECK_THROWS(engel_word(0));
}

TEST_CASE("two-letter normal form") {
  auto f = normalize_two_letter(parse_word("x^2y^3"));
  CHECK(f.a == std::vector<long>{2});
  CHECK(f.b == std::vector<long>{3});
  CHECK(f.transforms.empty());

  auto g = normalize_two_letter(parse_word("y^3x^2"));
  CHECK(g.a == std::vector<long>{2});
  CHECK(g.b == std::vector<long>{3});
  CHECK(g.transforms == std::vector<Transform>{Transform::CyclicShift});

  auto h = normalize_two_letter(parse_word("x^-1 y x y^-1"));
  CHECK(h.a == std::vector<long>{-1, 1});
  CHECK(h.b == std::vector<long>{1, -1});

  CHECK_THROWS_AS(normalize_two_letter(parse_word("x^5")), PurePowerError);
  CHECK_THROWS_AS(normalize_two_letter(parse_word("y x^3 y^-1")), PurePowerError);

  std::mt19937 rng(4);
  for (int it = 0; it < 100; ++it) {
    Word w = random_word(rng, 2, 12);
    if (w.is_identity()) continue;
    TwoLetterForm form;
    try {
      form = normalize_two_letter(w);
    } catch (const PurePowerError&) {
      continue;
    }
    CHECK(form.conjugator * form.word() * form.conjugator.inverse() == w);
    for (std::size_t i = 0; i < form.a.size(); ++i) {
      CHECK(form.a[i] != 0);
      CHECK(form.b[i] != 0);
    }
  }
}

TEST_CASE("proper powers") {
  auto p = proper_power_root(parse_word("xyxy"));
  CHECK(p.root == parse_word("xy"));
  CHECK(p.k == 2);
  auto q = proper_power_root(parse_word("[x,y]"));
  CHECK(q.k == 1);
  auto r = proper_power_root(parse_word("xyx^-1y^-1xyx^-1y^-1xyx^-1y^-1"));
  CHECK(r.root == parse_word("[x,y]"));
  CHECK(r.k == 3);
  CHECK(r.root.power(3) == parse_word("xyx^-1y^-1xyx^-1y^-1xyx^-1y^-1"));
  auto s = proper_power_root(parse_word("y x^6 y^-1"));
  CHECK(s.k == 6);
  CHECK(s.root == parse_word("y x y^-1"));

  std::mt19937 rng(5);
  for (int it = 0; it < 100; ++it) {
    Word u = random_word(rng, 2, 6), c = random_word(rng, 2, 3);
    int k = 1 + it % 4;
    Word w = c * u.power(k) * c.inverse();
    if (w.is_identity()) continue;
    auto pp = proper_power_root(w);
    CHECK(pp.root.power(pp.k) == w);
    CHECK(pp.k % k == 0);
    CHECK(proper_power_root(pp.root).k == 1);
  }
}

TEST_CASE("transform orbit") {
  auto orbit = transform_orbit(parse_word("x^2y^3"));
  CHECK(orbit.size() == 16);
  CHECK(orbit.front().word == parse_word("x^2y^3"));
  auto small = transform_orbit(parse_word("[x,y]"));
  CHECK(std::any_of(small.begin(), small.end(), [](const OrbitMember& m) { return m.word == parse_word("yxy^-1x^-1"); }));
}

TEST_CASE("evaluation at matrices") {
  Word x = Word::generator(2, 1);
  RationalMatrix u(1, 1, 0, 1);
  CHECK(evaluate(x, std::vector<RationalMatrix>{u, RationalMatrix::identity()}) == u);

  Rational a = frac(3, 2);
  RationalMatrix X(a, 0, 0, 1 / a), Y(0, 1, -1, 0);
  CHECK(evaluate(parse_word("[x,y]"), std::vector<RationalMatrix>{X, Y}) == RationalMatrix(a * a, 0, 0, 1 / (a * a)));

  std::mt19937 rng(6);
  for (int it = 0; it < 50; ++it) {
    std::vector<RationalMatrix> imgs{random_sl2(rng), random_sl2(rng)};
    Word p = random_word(rng, 2, 8), q = random_word(rng, 2, 8);
    CHECK(evaluate(p * q, imgs) == evaluate(p, imgs) * evaluate(q, imgs));
    CHECK(evaluate(p.inverse(), imgs) == inverse(evaluate(p, imgs)));
    CHECK(evaluate(commutator(p, q), imgs).det() == 1);
  }
  CHECK_THROWS(evaluate(parse_word("x^-1"), std::vector<RationalMatrix>{RationalMatrix(1, 1, 1, 1), u}));
}
