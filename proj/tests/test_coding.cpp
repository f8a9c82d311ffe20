#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "iex/coding.hpp"
#include "iex/induction.hpp"

using namespace iex;
using namespace iex::testing;

namespace {

// Combinatorial first-return oracle straight from the definitions: right
// return words are the minimal x with wx a factor ending in w.
std::vector<Word> return_words_oracle(const Iet& T, const Word& w, size_t maxlen) {
  FactorSet F = factors(T, w.size() + maxlen);
  std::vector<Word> gamma;
  for (size_t k = 1; k <= maxlen; ++k) {
    for (const Word& u : F.of_length(w.size() + k)) {
      if (u.compare(0, w.size(), w) == 0 && u.compare(u.size() - w.size(), w.size(), w) == 0)
        gamma.push_back(u.substr(w.size()));
    }
  }
  std::set<Word> gset(gamma.begin(), gamma.end());
  std::vector<Word> first;
  for (const Word& x : gamma) {
    bool minimal = true;
    for (size_t p = 1; p < x.size() && minimal; ++p)
      if (gset.count(x.substr(0, p))) minimal = false;
    if (minimal) first.push_back(x);
  }
  std::sort(first.begin(), first.end(), WordLess{T.order1()});
  return first;
}

const std::vector<std::vector<Word>> kSetFLevels = {
    {""},
    {"a", "b", "c"},
    {"ac", "ba", "bb", "cb", "cc"},
    {"acb", "acc", "bac", "bba", "cba", "cbb", "ccb"},
    {"acbb", "accb", "bacb", "bacc", "bbac", "cbac", "cbba", "ccba", "ccbb"},
    {"acbba", "accba", "accbb", "bacbb", "baccb", "bbacb", "bbacc", "cbacc", "cbbac", "ccbac",
     "ccbba"},
    {"acbbac", "accbac", "accbba", "bacbba", "baccba", "baccbb", "bbacbb", "bbaccb", "cbaccb",
     "cbbacb", "cbbacc", "ccbacc", "ccbbac"},
};

}  // namespace

TEST_CASE("natural coding") {
  QuadNum a = golden_alpha();
  CHECK(natural_coding(example_R(), a, 5) == "abaab");  // Fibonacci prefix
  CHECK(natural_coding(example_T(), a, 7) == "baccbac");
  CHECK(natural_coding(example_T(), QuadNum(frac(1, 3)), 0) == "");

  // prefix coherence
  Iet T = example_T();
  for (const QuadNum& z : grid_points(T.domain(), 7)) {
    Word longw = natural_coding(T, z, 18);
    CHECK(longw.compare(0, 11, natural_coding(T, z, 11)) == 0);
  }
}

TEST_CASE("word intervals") {
  Iet T = example_T();
  QuadNum a = golden_alpha();
  CHECK(*interval_I(T, "") == T.domain());
  CHECK(*interval_J(T, "") == T.domain());
  CHECK(*interval_I(T, "b") == SemiInterval(QuadNum(1) - a - a, QuadNum(1) - a));
  CHECK(*interval_J(T, "a") == SemiInterval(a + a, QuadNum(1)));

  // I_ba is nonempty and its points code with prefix "ba"
  auto iba = interval_I(T, "ba");
  REQUIRE(iba.has_value());
  for (const QuadNum& z : grid_points(*iba, 40)) CHECK(natural_coding(T, z, 2) == "ba");

  // no factor "bb" in the rotation language
  CHECK_FALSE(interval_I(example_R(), "bb").has_value());

  CHECK(word_translation(T, "a") == a + a);
  CHECK(word_translation(T, "bc") == QuadNum(4) * a - QuadNum(2));
  FactorSet F = factors(T, 6);
  for (const Word& w : F.all_nonempty()) {
    SemiInterval iw = *interval_I(T, w);
    SemiInterval jw = *interval_J(T, w);
    QuadNum shift = word_translation(T, w);
    CHECK(jw.lo == iw.lo + shift);
    CHECK(jw.hi == iw.hi + shift);
    // J_w is the forward image of I_w
    CHECK(T.iterate(iw.lo, static_cast<long>(w.size())) == jw.lo);
  }
}

TEST_CASE("factor language of the running example") {
  Iet T = example_T();
  FactorSet F = factors(T, 6);
  for (size_t k = 0; k <= 6; ++k) CHECK(F.of_length(k) == kSetFLevels[k]);

  FactorSet F20 = factors(T, 20);
  for (size_t k = 1; k <= 20; ++k) CHECK(F20.count_at(k) == 2 * k + 1);

  // every factor's interval is nonempty and sampled points code through it
  for (const Word& w : F.of_length(5)) {
    SemiInterval iw = *interval_I(T, w);
    for (const QuadNum& z : grid_points(iw, 50)) CHECK(natural_coding(T, z, w.size()) == w);
  }
}

TEST_CASE("factor language of the rotation") {
  FactorSet F = factors(example_R(), 2);
  CHECK(F.of_length(1) == std::vector<Word>{"a", "b"});
  CHECK(F.of_length(2) == std::vector<Word>{"aa", "ab", "ba"});  // no bb
  FactorSet F15 = factors(example_R(), 15);
  for (size_t k = 1; k <= 15; ++k) CHECK(F15.count_at(k) == k + 1);
}

TEST_CASE("factors refuses decomposable permutations") {
  Iet ident({'a', 'b'}, {'a', 'b'}, {QuadNum(1), golden_alpha()}, QuadNum(0));
  CHECK_THROWS_AS(factors(ident, 3), DecomposablePermutation);
}

TEST_CASE("boundary identity for image intervals") {
  // left boundaries of the J_y at length k are the forward orbit points
  // T^h(gamma_i), 1 <= h <= k, and there are (s-1)k+1 of them
  Iet T = example_T();
  FactorSet F = factors(T, 10);
  for (size_t k = 1; k <= 10; ++k) {
    std::set<QuadNum> lefts;
    for (const Word& y : F.of_length(k)) lefts.insert(interval_J(T, y)->lo);
    std::set<QuadNum> orbit;
    for (const QuadNum& g : T.separation_points()) {
      QuadNum cur = g;
      for (size_t h = 1; h <= k; ++h) {
        cur = T.apply(cur);
        orbit.insert(cur);
      }
    }
    CHECK(lefts == orbit);
    CHECK(lefts.size() == 2 * k + 1);
  }
}

TEST_CASE("uniform recurrence witness") {
  Iet T = example_T();
  FactorSet F = factors(T, 20);
  bool found = false;
  for (size_t n = 1; n <= 20 && !found; ++n) {
    bool all = true;
    for (const Word& w : F.of_length(n)) {
      for (char a : {'a', 'b', 'c'})
        if (w.find(a) == Word::npos) all = false;
    }
    found = all;
  }
  CHECK(found);
}

TEST_CASE("return words of the running example") {
  Iet T = example_T();
  CHECK(return_words(T, "a", ReturnSide::right) == std::vector<Word>{"cbba", "ccba", "ccbba"});
  CHECK(return_words(T, "b", ReturnSide::right) == std::vector<Word>{"acb", "accb", "b"});
  CHECK(return_words(T, "c", ReturnSide::right) == std::vector<Word>{"bac", "bbac", "c"});
  CHECK_THROWS_AS(return_words(T, "ccc", ReturnSide::right), WordNotInLanguage);

  // against the combinatorial definition, and |R_F(w)| = s
  FactorSet F4 = factors(T, 4);
  for (const Word& w : F4.all_nonempty()) {
    std::vector<Word> geometric = return_words(T, w, ReturnSide::right);
    CHECK(geometric == return_words_oracle(T, w, 14));
    CHECK(geometric.size() == 3);
  }

  // w R(w) = R'(w) w, as sets
  for (const Word w : {Word("a"), Word("b"), Word("c")}) {
    std::set<Word> lhs, rhs;
    for (const Word& x : return_words(T, w, ReturnSide::right)) lhs.insert(w + x);
    for (const Word& x : return_words(T, w, ReturnSide::left)) rhs.insert(x + w);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("morphism plumbing") {
  Morphism fib({'a', 'b'}, {"ab", "a"});
  CHECK(fib.apply("ab") == "aba");
  CHECK(compose(fib, fib).apply("a") == "aba");
  CHECK(is_primitive(fib));
  CHECK_FALSE(is_primitive(Morphism::identity({'a', 'b'})));

  auto m = incidence_matrix(fib);
  CHECK(m[0][0] == 1);
  CHECK(m[1][0] == 1);
  CHECK(m[0][1] == 1);
  CHECK(m[1][1] == 0);

  CHECK_THROWS_AS(Morphism({'a'}, {""}), NotACodingMorphism);
}

TEST_CASE("derived set of the running example at c") {
  Iet T = example_T();
  Morphism f({'a', 'b', 'c'}, {"bac", "bbac", "c"});
  FactorSet d = derived_set(T, "c", f, 3);
  CHECK(d.of_length(1) == std::vector<Word>{"a", "b", "c"});
  CHECK(d.of_length(2) == std::vector<Word>{"ac", "bb", "bc", "ca", "cb"});
  CHECK(d.of_length(3) == std::vector<Word>{"aca", "acb", "bbb", "bbc", "bcb", "cac", "cbb"});

  // wrong images are rejected
  Morphism bad({'a', 'b', 'c'}, {"bac", "bbac", "cc"});
  CHECK_THROWS_AS(derived_set(T, "c", bad, 3), NotACodingMorphism);
}

TEST_CASE("derivation closure") {
  // derived sets of the running example stay recurrent interval exchange
  // languages: both routes agree and the complexity stays (s-1)k+1
  Iet T = example_T();
  FactorSet F3 = factors(T, 3);
  for (const Word& w : F3.all_nonempty()) {
    std::vector<Word> images = return_words(T, w, ReturnSide::right);
    Morphism f(T.order1(), images);
    FactorSet d = derived_set(T, w, f, 5);  // throws if the routes disagree
    for (size_t k = 1; k <= 5; ++k) CHECK(d.count_at(k) == 2 * k + 1);
  }
}
