#include "qch/weyl.hpp"

#include <algorithm>
#include <stdexcept>

namespace qch {

WeylGroup WeylGroup::generate(const RootDatum& datum, std::size_t max_size) {
  WeylGroup g;
  g.datum_ = datum;
  int n = datum.cartan.rank;

  std::vector<IntMatrix> gens;
  for (int i = 1; i <= n; ++i) gens.push_back(simple_reflection_matrix(datum, i));

  g.elements_.push_back(WeylElement{{}, 0, identity_matrix(n)});
  g.by_matrix_[g.elements_[0].matrix] = 0;
  g.right_mult_.push_back(std::vector<int>(n, -1));

  // Breadth-first, letters tried in increasing order: the first word reaching
  // an element is its ShortLex normal form, and ids come out sorted by
  // (length, canonical word).
  for (std::size_t head = 0; head < g.elements_.size(); ++head) {
    for (int i = 1; i <= n; ++i) {
      if (g.right_mult_[head][i - 1] != -1) continue;
      IntMatrix m = matrix_product(g.elements_[head].matrix, gens[i - 1]);
      auto it = g.by_matrix_.find(m);
      int target;
      if (it != g.by_matrix_.end()) {
        target = it->second;
      } else {
        if (g.elements_.size() >= max_size)
          throw std::length_error("weyl group larger than the configured bound");
        WeylElement e;
        e.word = g.elements_[head].word;
        e.word.push_back(i);
        e.length = g.elements_[head].length + 1;
        e.matrix = m;
        target = static_cast<int>(g.elements_.size());
        g.elements_.push_back(std::move(e));
        g.by_matrix_.emplace(std::move(m), target);
        g.right_mult_.push_back(std::vector<int>(n, -1));
      }
      g.right_mult_[head][i - 1] = target;
      g.right_mult_[target][i - 1] = static_cast<int>(head);
    }
  }

  // Reflections located by their closed-form matrices: for a positive root
  // beta with root coordinates c and fundamental coordinates b,
  //   t_beta(omega_k) = omega_k - (2 d_k c_k / (beta,beta)) beta,
  // where (beta,beta) = sum_j c_j d_j b_j.
  for (const Weight& beta : datum.positive_roots) {
    auto rc = root_coords(datum, beta);
    Coord norm = 0;
    for (int j = 0; j < n; ++j) norm += (*rc)[j] * datum.cartan.symmetrizer[j] * beta.coords[j];
    IntMatrix t = identity_matrix(n);
    for (int k = 0; k < n; ++k) {
      Coord num = 2 * datum.cartan.symmetrizer[k] * (*rc)[k];
      if (num % norm != 0) throw std::logic_error("coroot pairing not integral");
      Coord pair = num / norm;
      for (int m = 0; m < n; ++m) t[m][k] -= pair * beta.coords[m];
    }
    auto id = g.find_matrix(t);
    if (!id) throw std::logic_error("reflection not found in group");
    g.reflections_.push_back(*id);
  }
  return g;
}

int WeylGroup::multiply_simple(int id, int simple_index) const {
  if (simple_index < 1 || simple_index > datum_.cartan.rank)
    throw std::out_of_range("multiply_simple: index out of range");
  return right_mult_.at(id)[simple_index - 1];
}

int WeylGroup::multiply(int a, int b) const {
  int cur = a;
  for (int letter : elements_.at(b).word) cur = right_mult_[cur][letter - 1];
  return cur;
}

int WeylGroup::inverse(int id) const {
  const auto& w = elements_.at(id).word;
  int cur = 0;
  for (auto it = w.rbegin(); it != w.rend(); ++it) cur = right_mult_[cur][*it - 1];
  return cur;
}

int WeylGroup::element_of_word(const std::vector<int>& word) const {
  int cur = 0;
  for (int letter : word) cur = multiply_simple(cur, letter);
  return cur;
}

std::optional<int> WeylGroup::find_matrix(const IntMatrix& m) const {
  auto it = by_matrix_.find(m);
  if (it == by_matrix_.end()) return std::nullopt;
  return it->second;
}

Weight dot_action(const RootDatum& datum, const WeylElement& w, const Weight& lam) {
  return apply_matrix(w.matrix, lam + datum.rho) - datum.rho;
}

Weight weyl_action(const WeylElement& w, const Weight& lam) {
  return apply_matrix(w.matrix, lam);
}

bool bruhat_leq(const WeylGroup& group, int w1, int w2) {
  int u = w1;
  const auto& word = group.element(w2).word;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    int shorter = group.multiply_simple(u, *it);
    if (group.length(shorter) < group.length(u)) u = shorter;
  }
  return u == group.identity();
}

std::vector<int> covers(const WeylGroup& group, int w) {
  std::vector<int> out;
  for (int t : group.reflections()) {
    int wt = group.multiply(w, t);
    if (group.length(wt) == group.length(w) + 1) out.push_back(wt);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace qch
