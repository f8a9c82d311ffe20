#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "helpers.hpp"
#include "iex/iet.hpp"

using namespace iex;
using namespace iex::testing;

TEST_CASE("construction derives the boundary data") {
  Iet T = example_T();
  QuadNum a = golden_alpha();
  CHECK(T.size() == 3);
  CHECK(T.perm() == std::vector<size_t>{1, 2, 0});
  CHECK(T.left() == QuadNum(0));
  CHECK(T.right() == QuadNum(1));

  // alpha_a = 2a, alpha_b = alpha_c = 2a - 1
  CHECK(T.alpha(0) == a + a);
  CHECK(T.alpha(1) == a + a - QuadNum(1));
  CHECK(T.alpha(2) == a + a - QuadNum(1));

  Iet R = example_R();
  CHECK(R.alpha(0) == a);
  CHECK(R.alpha(1) == a - QuadNum(1));

  QuadNum one(1);
  CHECK_THROWS_AS(Iet({'a', 'b'}, {'b', 'a'}, {one, QuadNum(0)}, QuadNum(0)), NonPositiveLength);
  CHECK_THROWS_AS(Iet({'a', 'b'}, {'b', 'x'}, {one, one}, QuadNum(0)), AlphabetMismatch);
  CHECK_THROWS_AS(Iet({'a', 'b'}, {'b', 'b'}, {one, one}, QuadNum(0)), AlphabetMismatch);
}

TEST_CASE("partition exactness") {
  for (const Iet& T : {example_T(), example_R(), example_rot3()}) {
    QuadNum total(0);
    for (size_t i = 0; i < T.size(); ++i) {
      total = total + T.length(i);
      if (i + 1 < T.size()) {
        CHECK(T.mu(i) == T.gamma(i + 1));
      }
      CHECK(T.alpha(i) == T.nu(i) - T.mu(i));
      CHECK(T.alpha(i) == T.delta(i) - T.gamma(i));
    }
    CHECK(T.left() + total == T.right());
    // image intervals tile the domain in the second order
    QuadNum acc = T.left();
    for (size_t k = 0; k < T.size(); ++k) {
      size_t i = T.perm()[k];
      CHECK(T.delta(i) == acc);
      acc = T.nu(i);
    }
    CHECK(acc == T.right());
  }
}

TEST_CASE("apply, locate, iterate") {
  Iet T = example_T();
  QuadNum a = golden_alpha();
  CHECK(T.apply(a) == QuadNum(3) * a - QuadNum(1));
  CHECK(T.apply(QuadNum(0)) == a + a);
  CHECK(T.locate(a) == 'b');
  CHECK(T.locate(QuadNum(0)) == 'a');
  CHECK_THROWS_AS(T.locate(QuadNum(1)), OutOfDomain);

  CHECK(T.iterate(a, 2) == T.apply(T.apply(a)));
  CHECK(T.iterate(a, 2) == QuadNum(5) * a - QuadNum(1));
  CHECK(T.iterate(a, 0) == a);

  for (const QuadNum& z : grid_points(T.domain(), 1000)) {
    CHECK(T.apply_inv(T.apply(z)) == z);
    CHECK(T.apply(T.apply_inv(z)) == z);
  }
  for (const QuadNum& z : grid_points(T.domain(), 25)) {
    CHECK(T.iterate(T.iterate(z, 5), -5) == z);
  }
}

TEST_CASE("separation points") {
  Iet T = example_T();
  QuadNum a = golden_alpha();
  std::vector<QuadNum> expected{QuadNum(0), QuadNum(1) - a - a, QuadNum(1) - a};
  CHECK(T.separation_points() == expected);

  Iet R = example_R();
  CHECK(R.separation_points() == std::vector<QuadNum>{QuadNum(0), QuadNum(1) - a});

  Iet one({'a'}, {'a'}, {QuadNum(1)}, QuadNum(0));
  CHECK(one.separation_points() == std::vector<QuadNum>{QuadNum(0)});
}

TEST_CASE("indecomposability") {
  CHECK(is_indecomposable(example_T().perm()));
  CHECK_FALSE(is_indecomposable(std::vector<size_t>{0, 1}));
  // transposition (a c) on three letters: indecomposable, yet such a
  // transformation need not be minimal
  CHECK(is_indecomposable(std::vector<size_t>{2, 1, 0}));
}

TEST_CASE("idoc probe") {
  CHECK_FALSE(idoc_probe(example_T(), 50).has_value());

  auto conn = idoc_probe(example_rot3(), 50);
  REQUIRE(conn.has_value());
  CHECK(conn->i == 2);
  CHECK(conn->j == 3);
  CHECK(conn->h == 1);

  Iet half({'a', 'b'}, {'b', 'a'}, {QuadNum(frac(1, 2)), QuadNum(frac(1, 2))}, QuadNum(0));
  CHECK(idoc_probe(half, 2).has_value());
}

TEST_CASE("epsilon bound") {
  Iet T = example_T();
  QuadNum a = golden_alpha();
  QuadNum one_minus_2a = QuadNum(1) - a - a;
  CHECK(epsilon_for(T, 1) == one_minus_2a);  // min(|2a|, |2a-1|)

  Iet R = example_R();
  CHECK(epsilon_for(R, 2) == one_minus_2a);  // |2a - 1|

  // sums that vanish exactly are excluded
  Iet half({'a', 'b'}, {'b', 'a'}, {QuadNum(frac(1, 2)), QuadNum(frac(1, 2))}, QuadNum(0));
  CHECK(epsilon_for(half, 2) == QuadNum(frac(1, 2)));  // |1/2 + (-1/2)| = 0 dropped

  Iet ident({'a'}, {'a'}, {QuadNum(1)}, QuadNum(0));
  CHECK_THROWS_AS(epsilon_for(ident, 3), DegenerateTransformation);
}

TEST_CASE("mirror") {
  Iet R = example_R();
  Iet mirrored = R.mirrored();
  QuadNum a = golden_alpha();
  CHECK(mirrored.length(0) == a);
  CHECK(mirrored.length(1) == QuadNum(1) - a);
  CHECK(mirrored.perm() == std::vector<size_t>{1, 0});

  // involution up to relabeling: the double mirror is the identity surgery
  for (const Iet& T : {example_T(), example_R()}) {
    CHECK(canonical_form(T.mirrored().mirrored(), CanonMode::equivalence).key() ==
          canonical_form(T, CanonMode::equivalence).key());
  }
}

TEST_CASE("canonical forms") {
  Iet T = example_T();
  QuadNum a = golden_alpha();

  CanonicalIet ce = canonical_form(T, CanonMode::equivalence);
  CHECK(ce.perm == T.perm());
  CHECK(ce.lengths[0] == T.length(0));  // already on [0,1)

  // rescaling and translating leaves the class unchanged
  QuadNum c = QuadNum(7) + QuadNum(3) * a;
  std::vector<QuadNum> scaled;
  for (size_t i = 0; i < T.size(); ++i) scaled.push_back(T.length(i) * c);
  Iet moved(T.order1(), T.order2(), scaled, QuadNum(5) - a);
  CHECK(canonical_form(moved, CanonMode::equivalence).key() == ce.key());
  CHECK(canonical_form(moved, CanonMode::similarity).key() ==
        canonical_form(T, CanonMode::similarity).key());

  // the paper's rescaled copy S of T on [2a, 1): lengths (8a-3, 2-5a, 2-5a)
  QuadNum s_len0 = QuadNum(8) * a - QuadNum(3);
  QuadNum s_len1 = QuadNum(2) - QuadNum(5) * a;
  Iet S({'a', 'b', 'c'}, {'b', 'c', 'a'}, {s_len0, s_len1, s_len1}, a + a);
  CHECK(canonical_form(S, CanonMode::equivalence).key() == ce.key());

  // representative rebuilds the same class
  CHECK(canonical_form(ce.representative(), CanonMode::equivalence).key() == ce.key());
}
