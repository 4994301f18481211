#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "qch/bgg.hpp"
#include "qch/module_chars.hpp"

using namespace qch;

namespace {

const BGGLayer& layer_at(const BGGComplexShape& cx, int degree) {
  for (const auto& layer : cx.layers)
    if (layer.degree == degree) return layer;
  REQUIRE(false);
  return cx.layers.front();
}

std::vector<std::size_t> layer_sizes(const BGGComplexShape& cx) {
  std::vector<std::size_t> sizes;
  for (const auto& layer : cx.layers) sizes.push_back(layer.cells.size());
  return sizes;
}

int edge_sign(const BGGComplexShape& cx, int from, int to) {
  for (const auto& e : cx.edges)
    if (e.from == from && e.to == to) return e.sign;
  REQUIRE(false);
  return 0;
}

// Signed incidence matrix of the differential landing in the layer of the
// shorter elements.
std::vector<std::vector<int>> incidence(const BGGComplexShape& cx,
                                        const BGGLayer& shorter,
                                        const BGGLayer& longer) {
  std::vector<std::vector<int>> m(shorter.cells.size(),
                                  std::vector<int>(longer.cells.size(), 0));
  for (const auto& e : cx.edges) {
    for (std::size_t r = 0; r < shorter.cells.size(); ++r) {
      if (shorter.cells[r].weyl_id != e.to) continue;
      for (std::size_t c = 0; c < longer.cells.size(); ++c)
        if (longer.cells[c].weyl_id == e.from) m[r][c] = e.sign;
    }
  }
  return m;
}

void check_differential_squares_to_zero(const BGGComplexShape& cx) {
  // layers are ascending in degree, so layers[i+1] holds the shorter words
  for (std::size_t i = 0; i + 2 < cx.layers.size(); ++i) {
    auto d_inner = incidence(cx, cx.layers[i + 1], cx.layers[i]);
    auto d_outer = incidence(cx, cx.layers[i + 2], cx.layers[i + 1]);
    for (std::size_t r = 0; r < d_outer.size(); ++r) {
      for (std::size_t c = 0; c < cx.layers[i].cells.size(); ++c) {
        int entry = 0;
        for (std::size_t k = 0; k < d_inner.size(); ++k)
          entry += d_outer[r][k] * d_inner[k][c];
        CHECK(entry == 0);
      }
    }
  }
}

void check_squares_anticommute(const WeylGroup& group,
                               const BGGComplexShape& cx) {
  int squares = 0;
  const int n = static_cast<int>(group.size());
  for (int x = 0; x < n; ++x) {
    for (int z = 0; z < n; ++z) {
      if (group.length(z) != group.length(x) + 2) continue;
      if (!bruhat_leq(group, x, z)) continue;
      std::vector<int> middles;
      for (int y : covers(group, x)) {
        auto up = covers(group, y);
        if (std::find(up.begin(), up.end(), z) != up.end())
          middles.push_back(y);
      }
      REQUIRE(middles.size() == 2);
      int product = edge_sign(cx, middles[0], x) * edge_sign(cx, z, middles[0]) *
                    edge_sign(cx, middles[1], x) * edge_sign(cx, z, middles[1]);
      CHECK(product == -1);
      ++squares;
    }
  }
  CHECK(squares > 0);
}

}  // namespace

TEST_CASE("rank one shape: two layers and a single positive edge") {
  RootDatum datum = build_root_datum("A1");
  WeylGroup group = WeylGroup::generate(datum);
  Weight mu{{0}};
  BGGComplexShape cx = build_bgg_complex(group, mu);

  REQUIRE(cx.layers.size() == 2);
  CHECK(cx.layers[0].degree == -1);
  CHECK(cx.layers[1].degree == 0);
  REQUIRE(layer_at(cx, 0).cells.size() == 1);
  REQUIRE(layer_at(cx, -1).cells.size() == 1);

  const BGGCell& top = layer_at(cx, 0).cells[0];
  const BGGCell& bottom = layer_at(cx, -1).cells[0];
  CHECK(top.weyl_id == group.identity());
  CHECK(top.word.empty());
  CHECK(top.label == "M_e");
  CHECK(bottom.word == std::vector<int>{1});
  CHECK(bottom.label == "M_1");

  // cell characters are the quasi-Verma fractions at w . mu
  CHECK(top.character == quasi_verma_char(datum, group.element(group.identity()), mu));
  CHECK(bottom.character == quasi_verma_char(datum, group.element(bottom.weyl_id), mu));
  CHECK(bottom.character.numerator() ==
        FormalChar::monomial(Weight{{-2}}, 0, 1));

  REQUIRE(cx.edges.size() == 1);
  CHECK(cx.edges[0].from == bottom.weyl_id);
  CHECK(cx.edges[0].to == top.weyl_id);
  CHECK(cx.edges[0].sign == 1);
}

TEST_CASE("layer sizes follow the length generating function") {
  RootDatum a2 = build_root_datum("A2");
  BGGComplexShape cx2 = build_bgg_complex(a2, Weight{{0, 0}});
  CHECK(layer_sizes(cx2) == std::vector<std::size_t>{1, 2, 2, 1});

  RootDatum b2 = build_root_datum("B2");
  BGGComplexShape cxb = build_bgg_complex(b2, Weight{{1, 0}});
  CHECK(layer_sizes(cxb) == std::vector<std::size_t>{1, 2, 2, 2, 1});
}

TEST_CASE("layer sizes are palindromic") {
  for (const char* label : {"A1", "A2", "A3", "B2", "B3", "C3", "G2"}) {
    RootDatum datum = build_root_datum(label);
    Weight mu{std::vector<Coord>(datum.cartan.rank, 1)};
    BGGComplexShape cx = build_bgg_complex(datum, mu);
    auto sizes = layer_sizes(cx);
    auto reversed = sizes;
    std::reverse(reversed.begin(), reversed.end());
    CHECK(sizes == reversed);
  }
}

TEST_CASE("every length-two interval is a square with sign product -1") {
  for (const char* label : {"A2", "A3", "B2", "B3", "G2"}) {
    CAPTURE(label);
    RootDatum datum = build_root_datum(label);
    WeylGroup group = WeylGroup::generate(datum);
    Weight mu{std::vector<Coord>(datum.cartan.rank, 0)};
    BGGComplexShape cx = build_bgg_complex(group, mu);
    check_squares_anticommute(group, cx);
  }
}

TEST_CASE("signed incidence matrices compose to zero") {
  for (const char* label : {"A2", "A3", "B2", "B3", "G2"}) {
    CAPTURE(label);
    RootDatum datum = build_root_datum(label);
    Weight mu{std::vector<Coord>(datum.cartan.rank, 2)};
    BGGComplexShape cx = build_bgg_complex(datum, mu);
    check_differential_squares_to_zero(cx);
  }
}

TEST_CASE("sign assignment is deterministic across rebuilds") {
  RootDatum datum = build_root_datum("B3");
  WeylGroup group = WeylGroup::generate(datum);
  Weight mu{{0, 1, 2}};
  BGGComplexShape first = build_bgg_complex(group, mu);
  BGGComplexShape second = build_bgg_complex(group, mu);
  CHECK(first.edges == second.edges);
}

TEST_CASE("euler characteristic of the shape is the Weyl character") {
  struct Case {
    const char* label;
    std::vector<Weight> weights;
  };
  const std::vector<Case> cases = {
      {"A1", {Weight{{0}}, Weight{{1}}, Weight{{2}}}},
      {"A2", {Weight{{0, 0}}, Weight{{1, 0}}, Weight{{2, 1}}, Weight{{2, 2}}}},
      {"A3", {Weight{{0, 0, 0}}, Weight{{1, 0, 2}}, Weight{{2, 2, 2}}}},
      {"B2", {Weight{{0, 0}}, Weight{{0, 1}}, Weight{{2, 2}}}},
      {"G2", {Weight{{0, 0}}, Weight{{1, 0}}, Weight{{2, 2}}}},
  };
  for (const auto& c : cases) {
    RootDatum datum = build_root_datum(c.label);
    WeylGroup group = WeylGroup::generate(datum);
    for (const Weight& mu : c.weights) {
      CAPTURE(c.label);
      CAPTURE(weight_str(mu));
      BGGComplexShape cx = build_bgg_complex(group, mu);
      RationalChar euler = euler_character(cx);
      WeylChar w = weyl_char(group, mu);
      CHECK(rc_equal(datum, euler, w.fraction));
      CHECK(rc_equal(datum, euler, RationalChar(w.polynomial)));
    }
  }
}

TEST_CASE("euler characteristic at weight zero is the trivial character") {
  RootDatum datum = build_root_datum("B2");
  BGGComplexShape cx = build_bgg_complex(datum, Weight{{0, 0}});
  RationalChar one(FormalChar::one(2));
  CHECK(rc_equal(datum, euler_character(cx), one));
}

TEST_CASE("cell grading matches word length") {
  RootDatum datum = build_root_datum("A3");
  WeylGroup group = WeylGroup::generate(datum);
  BGGComplexShape cx = build_bgg_complex(group, Weight{{1, 1, 1}});
  for (const auto& layer : cx.layers)
    for (const auto& cell : layer.cells) {
      CHECK(layer.degree == -group.length(cell.weyl_id));
      CHECK(static_cast<int>(cell.word.size()) == group.length(cell.weyl_id));
    }
}

TEST_CASE("Schubert-cell grading flips degrees and relabels cells") {
  RootDatum datum = build_root_datum("A2");
  WeylGroup group = WeylGroup::generate(datum);
  Weight mu{{1, 1}};
  BGGComplexShape bgg = build_bgg_complex(group, mu);
  BGGComplexShape cousin = cousin_shape(group, mu);

  CHECK(cousin.edges == bgg.edges);
  REQUIRE(cousin.layers.size() == bgg.layers.size());
  for (const auto& layer : cousin.layers) {
    for (const auto& cell : layer.cells) {
      CHECK(layer.degree == group.length(cell.weyl_id));
      CHECK(cell.label.substr(0, 2) == "S_");
      // cell content is untouched by the relabeling
      const BGGLayer& twin = layer_at(bgg, -layer.degree);
      auto match = std::find_if(twin.cells.begin(), twin.cells.end(),
                                [&](const BGGCell& c) { return c.weyl_id == cell.weyl_id; });
      REQUIRE(match != twin.cells.end());
      CHECK(match->character == cell.character);
      CHECK(match->word == cell.word);
    }
  }

  const BGGLayer& points = layer_at(cousin, 0);
  REQUIRE(points.cells.size() == 1);
  CHECK(points.cells[0].label == "S_e");
  CHECK(layer_at(cousin, 3).cells[0].label == "S_121");
}

TEST_CASE("non-dominant highest weight is rejected") {
  RootDatum datum = build_root_datum("A2");
  CHECK_THROWS_AS(build_bgg_complex(datum, Weight{{-1, 0}}), std::domain_error);
  CHECK_THROWS_AS(cousin_shape(datum, Weight{{0, -2}}), std::domain_error);
}
