#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "tazrp/composition.hpp"

using namespace tazrp;

TEST_CASE("enumeration is reverse-lexicographic and complete") {
  auto zero = enumerate_compositions(0, 3);
  REQUIRE(zero.size() == 1);
  CHECK(zero[0].entries == std::vector<int>{0, 0, 0});

  auto b2 = enumerate_compositions(2, 3);
  REQUIRE(b2.size() == 6);  // stars and bars: binom(4,2)
  CHECK(b2.front().entries == std::vector<int>{2, 0, 0});
  CHECK(b2.back().entries == std::vector<int>{0, 0, 2});
  CHECK(std::count(b2.begin(), b2.end(), Composition({0, 1, 1})) == 1);
  // strictly decreasing lexicographic
  for (size_t i = 0; i + 1 < b2.size(); ++i)
    CHECK(b2[i].entries > b2[i + 1].entries);

  auto b8 = enumerate_compositions(8, 3);
  CHECK(std::count(b8.begin(), b8.end(), Composition({3, 2, 3})) == 1);
}

TEST_CASE("enumeration size matches the stars-and-bars count") {
  for (int l = 0; l <= 6; ++l)
    for (int L = 1; L <= 5; ++L)
      CHECK(Int(enumerate_compositions(l, L).size()) == composition_count(l, L));
}

TEST_CASE("rank and unrank invert each other") {
  CHECK(rank_composition(Composition({0, 0, 0})) == 0);
  for (int l = 0; l <= 5; ++l)
    for (int L = 1; L <= 5; ++L) {
      auto all = enumerate_compositions(l, L);
      for (size_t i = 0; i < all.size(); ++i) {
        CHECK(rank_composition(all[i]) == Int(i));
        CHECK(unrank_composition(Int(i), l, L) == all[i]);
      }
    }
  CHECK_THROWS(unrank_composition(Int(6), 2, 3));
}

TEST_CASE("dominance order") {
  CHECK(dominance_ge(Composition({1, 2, 1, 3}), Composition({1, 2, 0, 1})));
  CHECK(!dominance_ge(Composition({1, 0}), Composition({0, 1})));
  CHECK_THROWS(dominance_ge(Composition({1, 0}), Composition({1, 0, 0})));

  // partial order on B_3 with L=3
  auto b3 = enumerate_compositions(3, 3);
  for (const auto& u : b3) {
    CHECK(dominance_ge(u, u));
    for (const auto& v : b3) {
      if (dominance_ge(u, v) && dominance_ge(v, u)) CHECK(u == v);
      for (const auto& w : b3)
        if (dominance_ge(u, v) && dominance_ge(v, w))
          CHECK(dominance_ge(u, w));
    }
  }
}

TEST_CASE("multiplicity arrays and crystal cardinality") {
  MultiplicityArray m({2, 1, 2, 3});
  CHECK(m.ell == std::vector<int>{8, 6, 5, 3});
  CHECK_THROWS(MultiplicityArray({1, 0, 2}));

  // #B(m) by direct product enumeration
  auto direct = [](const MultiplicityArray& ma, int L) {
    Int prod = 1;
    for (int a = 1; a <= ma.n(); ++a)
      prod *= Int(enumerate_compositions(ma.ell_of(a), L).size());
    return prod;
  };
  MultiplicityArray m11({1, 1});
  CHECK(count_B(m11, 2) == 6);
  CHECK(count_B(m11, 2) == direct(m11, 2));
  MultiplicityArray m112({1, 1, 2});
  CHECK(count_B(m112, 3) == 900);
  CHECK(count_B(m112, 3) == direct(m112, 3));
  MultiplicityArray m1({3});
  CHECK(count_B(m1, 4) == binomial(6, 3));  // single factor, n = 1
  // L = 1 degenerates to a single state
  CHECK(count_B(m112, 1) == 1);
}

TEST_CASE("composition text round trip") {
  CHECK(to_text(Composition({0, 1, 2, 1})) == "0121");
  CHECK(parse_composition("0121") == Composition({0, 1, 2, 1}));
  CHECK(to_text(Composition({10, 0, 2})) == "10,0,2");
  CHECK(parse_composition("10,0,2") == Composition({10, 0, 2}));
  CHECK_THROWS(parse_composition("12a"));
}
