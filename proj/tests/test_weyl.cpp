#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "qch/weyl.hpp"

using qch::build_root_datum;
using qch::Coord;
using qch::RootDatum;
using qch::Weight;
using qch::WeylGroup;

namespace {

Weight wt(std::vector<Coord> c) { return Weight{std::move(c)}; }

// Bruhat order as the reflexive-transitive closure of the covering relation,
// independent of the subword scan.
std::vector<std::vector<bool>> closure_of_covers(const WeylGroup& g) {
  int n = static_cast<int>(g.size());
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (int w = 0; w < n; ++w) {
    leq[w][w] = true;
    for (int c : qch::covers(g, w)) leq[w][c] = true;
  }
  // Elements are sorted by length, so one sweep in id order suffices per
  // intermediate node; run the full Floyd-Warshall style closure anyway.
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (leq[i][k])
        for (int j = 0; j < n; ++j)
          if (leq[k][j]) leq[i][j] = true;
  return leq;
}

}  // namespace

TEST_CASE("small group tables") {
  WeylGroup a1 = WeylGroup::generate(build_root_datum("A1"));
  CHECK(a1.size() == 2);
  CHECK(a1.element(0).word.empty());
  CHECK(a1.element(1).word == std::vector<int>{1});
  CHECK(a1.element(1).length == 1);

  WeylGroup a2 = WeylGroup::generate(build_root_datum("A2"));
  REQUIRE(a2.size() == 6);
  std::map<int, int> by_length;
  for (const auto& e : a2.elements()) ++by_length[e.length];
  CHECK(by_length == std::map<int, int>{{0, 1}, {1, 2}, {2, 2}, {3, 1}});
  CHECK(a2.element(a2.longest()).word == std::vector<int>{1, 2, 1});

  CHECK(WeylGroup::generate(build_root_datum("B2")).size() == 8);
  CHECK(WeylGroup::generate(build_root_datum("B2")).element(7).length == 4);
  CHECK(WeylGroup::generate(build_root_datum("G2")).size() == 12);
  CHECK(WeylGroup::generate(build_root_datum("A3")).size() == 24);

  CHECK_THROWS_AS(WeylGroup::generate(build_root_datum("A3"), 10), std::length_error);
}

TEST_CASE("canonical words are ShortLex normal forms") {
  WeylGroup g = WeylGroup::generate(build_root_datum("A2"));
  CHECK(g.element_of_word({2, 1, 2}) == g.element_of_word({1, 2, 1}));
  CHECK(g.element(g.element_of_word({2, 1, 2})).word == std::vector<int>{1, 2, 1});
  CHECK(g.element_of_word({1, 1}) == g.identity());
  CHECK(g.element_of_word({2, 2, 1, 1}) == g.identity());
  CHECK_THROWS_AS(g.element_of_word({3}), std::out_of_range);
  // Ids are sorted by length, then by canonical word.
  for (std::size_t i = 1; i < g.size(); ++i) {
    const auto& prev = g.element(static_cast<int>(i) - 1);
    const auto& cur = g.element(static_cast<int>(i));
    CHECK(std::tie(prev.length, prev.word) < std::tie(cur.length, cur.word));
  }
}

TEST_CASE("length identities") {
  for (const char* label : {"A2", "B2", "G2"}) {
    WeylGroup g = WeylGroup::generate(build_root_datum(label));
    int w0 = g.longest();
    for (int w = 0; w < static_cast<int>(g.size()); ++w) {
      CHECK(g.length(g.inverse(w)) == g.length(w));
      CHECK(g.length(g.multiply(w0, w)) == g.length(w0) - g.length(w));
      CHECK(g.multiply(w, g.inverse(w)) == g.identity());
    }
  }
}

TEST_CASE("dot action") {
  RootDatum a1 = build_root_datum("A1");
  WeylGroup g = WeylGroup::generate(a1);
  const auto& s = g.element(1);
  CHECK(qch::dot_action(a1, s, wt({0})) == wt({-2}));
  for (Coord ell : {3, 5})
    for (Coord k = 1; k <= 3; ++k)
      CHECK(qch::dot_action(a1, s, wt({k * ell})) == wt({-k * ell - 2}));
  CHECK(qch::dot_action(a1, g.element(0), wt({7})) == wt({7}));

  RootDatum b2 = build_root_datum("B2");
  WeylGroup gb = WeylGroup::generate(b2);
  for (const Weight& lam : {wt({0, 0}), wt({2, -1}), wt({-3, 4})})
    for (int w1 = 0; w1 < static_cast<int>(gb.size()); ++w1)
      for (int w2 = 0; w2 < static_cast<int>(gb.size()); ++w2) {
        Weight lhs = qch::dot_action(b2, gb.element(gb.multiply(w1, w2)), lam);
        Weight rhs = qch::dot_action(b2, gb.element(w1), qch::dot_action(b2, gb.element(w2), lam));
        CHECK(lhs == rhs);
      }
}

TEST_CASE("bruhat order basics") {
  WeylGroup g = WeylGroup::generate(build_root_datum("A2"));
  int s1 = g.element_of_word({1});
  int s2 = g.element_of_word({2});
  int s1s2 = g.element_of_word({1, 2});
  for (int w = 0; w < static_cast<int>(g.size()); ++w) {
    CHECK(qch::bruhat_leq(g, g.identity(), w));
    CHECK(qch::bruhat_leq(g, w, g.longest()));
    CHECK(qch::bruhat_leq(g, w, w));
  }
  CHECK(qch::bruhat_leq(g, s1, s1s2));
  CHECK_FALSE(qch::bruhat_leq(g, s1, s2));
  CHECK_FALSE(qch::bruhat_leq(g, s1s2, s1));
}

TEST_CASE("covering relation") {
  WeylGroup a2 = WeylGroup::generate(build_root_datum("A2"));
  CHECK(qch::covers(a2, a2.identity()) ==
        std::vector<int>{a2.element_of_word({1}), a2.element_of_word({2})});
  CHECK(qch::covers(a2, a2.element_of_word({1})) ==
        std::vector<int>{a2.element_of_word({1, 2}), a2.element_of_word({2, 1})});
  WeylGroup a1 = WeylGroup::generate(build_root_datum("A1"));
  CHECK(qch::covers(a1, 1).empty());
}

TEST_CASE("subword criterion matches closure of covers") {
  for (const char* label : {"A1", "A2", "A3", "B2", "B3", "G2"}) {
    WeylGroup g = WeylGroup::generate(build_root_datum(label));
    auto leq = closure_of_covers(g);
    for (int i = 0; i < static_cast<int>(g.size()); ++i)
      for (int j = 0; j < static_cast<int>(g.size()); ++j)
        CHECK(qch::bruhat_leq(g, i, j) == leq[i][j]);
  }
}

TEST_CASE("length two intervals are diamonds") {
  for (const char* label : {"A2", "A3", "B3", "G2"}) {
    WeylGroup g = WeylGroup::generate(build_root_datum(label));
    for (int x = 0; x < static_cast<int>(g.size()); ++x)
      for (int z = 0; z < static_cast<int>(g.size()); ++z) {
        if (g.length(z) != g.length(x) + 2 || !qch::bruhat_leq(g, x, z)) continue;
        int middles = 0;
        for (int y : qch::covers(g, x))
          if (qch::bruhat_leq(g, y, z)) ++middles;
        CHECK(middles == 2);
      }
  }
}

TEST_CASE("reflections") {
  for (const char* label : {"A2", "B2", "G2", "B3"}) {
    WeylGroup g = WeylGroup::generate(build_root_datum(label));
    const auto& refl = g.reflections();
    CHECK(refl.size() == g.datum().positive_roots.size());
    std::set<int> distinct(refl.begin(), refl.end());
    CHECK(distinct.size() == refl.size());
    for (int t : refl) {
      CHECK(g.length(t) % 2 == 1);
      CHECK(g.multiply(t, t) == g.identity());
    }
  }
  // Simple roots come first among the positive roots, and their reflections
  // are the generators.
  WeylGroup g = WeylGroup::generate(build_root_datum("A2"));
  std::set<int> simple_refl(g.reflections().begin(), g.reflections().begin() + 2);
  CHECK(simple_refl == std::set<int>{g.element_of_word({1}), g.element_of_word({2})});
}
