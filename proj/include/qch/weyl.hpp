#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "qch/root_datum.hpp"

namespace qch {

/// Group element with its ShortLex-least reduced word.  Elements are handled
/// by dense integer ids inside a WeylGroup; ids are assigned in order of
/// (length, canonical word), so 0 is the identity and the last id is the
/// longest element.
struct WeylElement {
  std::vector<int> word;  // simple-reflection indices, 1-based
  int length = 0;
  IntMatrix matrix;  // action on fundamental coordinates
};

class WeylGroup {
 public:
  /// Generates the full group by breadth-first closure under right
  /// multiplication.  Throws std::length_error once more than max_size
  /// elements appear.
  static WeylGroup generate(const RootDatum& datum, std::size_t max_size = 51840);

  const RootDatum& datum() const { return datum_; }
  std::size_t size() const { return elements_.size(); }
  const WeylElement& element(int id) const { return elements_.at(id); }
  const std::vector<WeylElement>& elements() const { return elements_; }

  int identity() const { return 0; }
  int longest() const { return static_cast<int>(elements_.size()) - 1; }
  int length(int id) const { return elements_.at(id).length; }

  /// Right multiplication by a simple reflection (1-based), from the Cayley
  /// table.
  int multiply_simple(int id, int simple_index) const;
  /// Product of two elements via the canonical word of the right factor.
  int multiply(int a, int b) const;
  int inverse(int id) const;
  /// Element reached from the identity by the given letters; the word need
  /// not be reduced.  Throws std::out_of_range on a bad letter.
  int element_of_word(const std::vector<int>& word) const;
  std::optional<int> find_matrix(const IntMatrix& m) const;

  /// Ids of all reflections, indexed like datum().positive_roots.
  const std::vector<int>& reflections() const { return reflections_; }

 private:
  RootDatum datum_;
  std::vector<WeylElement> elements_;
  std::map<IntMatrix, int> by_matrix_;
  std::vector<std::vector<int>> right_mult_;  // [id][i-1] -> id of w s_i
  std::vector<int> reflections_;
};

/// rho-shifted action w(lam + rho) - rho.
Weight dot_action(const RootDatum& datum, const WeylElement& w, const Weight& lam);

/// Plain linear action.
Weight weyl_action(const WeylElement& w, const Weight& lam);

/// Bruhat order via the subword criterion: scan the canonical word of w2
/// right to left, greedily shortening w1.
bool bruhat_leq(const WeylGroup& group, int w1, int w2);

/// Ids of the elements covering w: products w t, t a reflection, of length
/// exactly length(w) + 1.  Sorted ascending.
std::vector<int> covers(const WeylGroup& group, int w);

}  // namespace qch
