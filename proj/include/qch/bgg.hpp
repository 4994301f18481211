#pragma once

#include <string>
#include <vector>

#include "qch/formal_char.hpp"
#include "qch/module_chars.hpp"
#include "qch/weyl.hpp"

namespace qch {

struct BGGCell {
  int weyl_id = 0;
  std::vector<int> word;  // canonical reduced word of w
  std::string label;
  RationalChar character;  // quasi-Verma character at w . mu
};

/// Differential edge from the longer element to the shorter one it covers.
struct BGGEdge {
  int from = 0;
  int to = 0;
  int sign = 0;  // +1 or -1

  bool operator==(const BGGEdge&) const = default;
};

struct BGGLayer {
  int degree = 0;
  std::vector<BGGCell> cells;
};

/// Signed combinatorial shape of the complex of quasi-Verma characters over
/// the Weyl group: one cell per element, graded by length, one edge per
/// Bruhat cover, signs chosen so every length-2 square anticommutes.
struct BGGComplexShape {
  RootDatum datum;
  Weight highest_weight;
  std::vector<BGGLayer> layers;  // ascending degree
  std::vector<BGGEdge> edges;
};

/// Builds the shape for a dominant weight: layer of degree -k holds the
/// elements of length k with their quasi-Verma characters.  Throws
/// std::domain_error when mu is not dominant.
BGGComplexShape build_bgg_complex(const WeylGroup& group, const Weight& mu);
BGGComplexShape build_bgg_complex(const RootDatum& datum, const Weight& mu);

/// Alternating sum over layers, sum_k (-1)^k (layer of length k).
RationalChar euler_character(const BGGComplexShape& cx);

/// The same shape graded by Schubert cells: degree of S_w is l(w) and labels
/// name the cells; cells and edges are identical to build_bgg_complex.
BGGComplexShape cousin_shape(const WeylGroup& group, const Weight& mu);
BGGComplexShape cousin_shape(const RootDatum& datum, const Weight& mu);

}  // namespace qch
