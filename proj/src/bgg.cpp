#include "qch/bgg.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>

namespace qch {

namespace {

std::string word_suffix(const std::vector<int>& word) {
  if (word.empty()) return "e";
  std::string s;
  for (int letter : word) s += std::to_string(letter);
  return s;
}

// One anticommutation constraint per length-2 Bruhat interval: the four edge
// signs of the square multiply to -1.  Over GF(2) with sign = (-1)^x this is
// a linear system; rows are solved by elimination in edge order with free
// variables set to 0, so the assignment is deterministic.
std::vector<int> solve_signs(const WeylGroup& group,
                             const std::vector<BGGEdge>& edges) {
  std::map<std::pair<int, int>, int> edge_index;
  for (int i = 0; i < static_cast<int>(edges.size()); ++i)
    edge_index[{edges[i].from, edges[i].to}] = i;

  std::vector<std::vector<int>> rows;  // column indices with a 1 bit, rhs = 1
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
      if (middles.size() != 2)
        throw std::logic_error("bgg: length-2 interval is not a diamond");
      std::vector<int> row = {
          edge_index.at({middles[0], x}), edge_index.at({z, middles[0]}),
          edge_index.at({middles[1], x}), edge_index.at({z, middles[1]})};
      std::sort(row.begin(), row.end());
      rows.push_back(std::move(row));
    }
  }

  const std::size_t m = edges.size();
  const std::size_t blocks = m / 64 + 2;  // last slot carries the rhs bit
  std::vector<std::vector<std::uint64_t>> mat;
  for (const auto& row : rows) {
    std::vector<std::uint64_t> bits(blocks, 0);
    for (int c : row) bits[c / 64] ^= std::uint64_t{1} << (c % 64);
    bits[blocks - 1] = 1;
    mat.push_back(std::move(bits));
  }

  std::vector<int> pivot_row_of(m, -1);
  std::size_t next_row = 0;
  for (std::size_t col = 0; col < m && next_row < mat.size(); ++col) {
    std::size_t pick = next_row;
    while (pick < mat.size() &&
           !((mat[pick][col / 64] >> (col % 64)) & 1))
      ++pick;
    if (pick == mat.size()) continue;
    std::swap(mat[next_row], mat[pick]);
    for (std::size_t r = 0; r < mat.size(); ++r) {
      if (r == next_row) continue;
      if ((mat[r][col / 64] >> (col % 64)) & 1)
        for (std::size_t b = 0; b < blocks; ++b) mat[r][b] ^= mat[next_row][b];
    }
    pivot_row_of[col] = static_cast<int>(next_row);
    ++next_row;
  }
  for (std::size_t r = next_row; r < mat.size(); ++r)
    if (mat[r][blocks - 1] & 1)
      throw std::logic_error("bgg: inconsistent sign constraints");

  std::vector<int> signs(m, 1);
  for (std::size_t col = 0; col < m; ++col)
    if (pivot_row_of[col] >= 0 && (mat[pivot_row_of[col]][blocks - 1] & 1))
      signs[col] = -1;
  return signs;
}

BGGComplexShape build_shape(const WeylGroup& group, const Weight& mu,
                            bool schubert_grading) {
  const RootDatum& datum = group.datum();
  if (!is_dominant(mu))
    throw std::domain_error("bgg: highest weight must be dominant");

  BGGComplexShape cx;
  cx.datum = datum;
  cx.highest_weight = mu;

  const int n = static_cast<int>(group.size());
  const int max_length = group.length(group.longest());

  for (int k = max_length; k >= 0; --k) {
    BGGLayer layer;
    layer.degree = schubert_grading ? k : -k;
    for (int w = 0; w < n; ++w) {
      if (group.length(w) != k) continue;
      BGGCell cell;
      cell.weyl_id = w;
      cell.word = group.element(w).word;
      cell.label = (schubert_grading ? "S_" : "M_") + word_suffix(cell.word);
      cell.character = quasi_verma_char(datum, group.element(w), mu);
      layer.cells.push_back(std::move(cell));
    }
    cx.layers.push_back(std::move(layer));
  }
  if (schubert_grading)
    std::reverse(cx.layers.begin(), cx.layers.end());  // keep ascending degree

  for (int w = 0; w < n; ++w)
    for (int c : covers(group, w)) cx.edges.push_back({c, w, 1});
  std::vector<int> signs = solve_signs(group, cx.edges);
  for (std::size_t i = 0; i < cx.edges.size(); ++i)
    cx.edges[i].sign = signs[i];
  return cx;
}

}  // namespace

BGGComplexShape build_bgg_complex(const WeylGroup& group, const Weight& mu) {
  return build_shape(group, mu, false);
}

BGGComplexShape build_bgg_complex(const RootDatum& datum, const Weight& mu) {
  WeylGroup group = WeylGroup::generate(datum);
  return build_bgg_complex(group, mu);
}

RationalChar euler_character(const BGGComplexShape& cx) {
  RationalChar total(FormalChar{});
  for (const auto& layer : cx.layers) {
    Int sgn = (layer.degree % 2 == 0) ? 1 : -1;
    for (const auto& cell : layer.cells)
      total = rc_add(total, rc_scale(sgn, cell.character));
  }
  return total;
}

BGGComplexShape cousin_shape(const WeylGroup& group, const Weight& mu) {
  return build_shape(group, mu, true);
}

BGGComplexShape cousin_shape(const RootDatum& datum, const Weight& mu) {
  WeylGroup group = WeylGroup::generate(datum);
  return cousin_shape(group, mu);
}

}  // namespace qch
