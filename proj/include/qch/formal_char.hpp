#pragma once

#include <map>
#include <utility>
#include <vector>

#include "qch/root_datum.hpp"
#include "qch/types.hpp"

namespace qch {

/// Exact Laurent polynomial on the weight lattice with one auxiliary grading
/// variable t: a finitely supported map (weight, t-degree) -> integer.
class FormalChar {
 public:
  using Key = std::pair<Weight, Coord>;

  FormalChar() = default;
  static FormalChar monomial(Weight w, Coord t_degree, Int coeff);
  /// The unit e^0 t^0 for the given rank.
  static FormalChar one(int rank);

  bool is_zero() const { return terms_.empty(); }
  const std::map<Key, Int>& terms() const { return terms_; }
  Int coeff(const Weight& w, Coord t_degree) const;
  std::size_t term_count() const { return terms_.size(); }

  void add_term(const Weight& w, Coord t_degree, const Int& coeff);

  FormalChar operator-() const;
  FormalChar& operator+=(const FormalChar& o);
  FormalChar& operator-=(const FormalChar& o);
  friend FormalChar operator+(FormalChar a, const FormalChar& b) { return a += b; }
  friend FormalChar operator-(FormalChar a, const FormalChar& b) { return a -= b; }
  friend FormalChar operator*(const FormalChar& a, const FormalChar& b);
  FormalChar& operator*=(const FormalChar& o) { return *this = *this * o; }
  friend FormalChar operator*(const Int& c, const FormalChar& a);
  bool operator==(const FormalChar& o) const = default;

  /// Sum of all coefficients (every e^mu and t set to 1).
  Int eval_at_one() const;

 private:
  std::map<Key, Int> terms_;
};

/// One denominator factor (1 - e^shift t^d)^multiplicity.  Every shift must
/// have strictly negative height so geometric expansion loses height
/// monomial by monomial.
struct DenomFactor {
  Weight shift;
  Coord t_degree = 0;
  int multiplicity = 1;

  auto operator<=>(const DenomFactor&) const = default;
};

/// Formal fraction numerator / prod of DenomFactors.  The factor list is
/// kept sorted with equal factors merged; numerator and denominator are not
/// required to be coprime, since equality goes through cross-multiplication.
class RationalChar {
 public:
  RationalChar() = default;
  explicit RationalChar(FormalChar num, std::vector<DenomFactor> den = {});

  const FormalChar& numerator() const { return num_; }
  const std::vector<DenomFactor>& denominator() const { return den_; }
  bool operator==(const RationalChar& o) const = default;  // structural, not semantic

 private:
  FormalChar num_;
  std::vector<DenomFactor> den_;
};

/// The polynomial (1 - e^shift t^d)^multiplicity.
FormalChar denom_factor_poly(const DenomFactor& f, int rank);

/// Exact semantic equality of fractions, by cancelling shared factors and
/// cross-multiplying.  Throws std::domain_error if any denominator factor
/// has nonnegative height.
bool rc_equal(const RootDatum& datum, const RationalChar& a, const RationalChar& b);

/// Sum over the least common multiset of denominator factors.
RationalChar rc_add(const RationalChar& a, const RationalChar& b);
RationalChar rc_sub(const RationalChar& a, const RationalChar& b);
RationalChar rc_mul(const RationalChar& a, const RationalChar& b);
RationalChar rc_scale(const Int& c, const RationalChar& a);

/// All monomials of the geometric expansion whose weight mu satisfies
/// height(top - mu) <= max_height, where top is the maximal-height numerator
/// weight.  Heights are measured with every simple root at height 1; the
/// comparison is done in exact det-scaled integers.  Throws
/// std::invalid_argument for max_height < 0 and std::domain_error for a
/// denominator factor of nonnegative height.
FormalChar expand_truncated(const RationalChar& c, const RootDatum& datum, Coord max_height);

/// Exact division of num by prod (1 - e^shift t^d)^mult; throws
/// std::domain_error when the division leaves a remainder.
FormalChar divide_exact(const RootDatum& datum, const FormalChar& num,
                        const std::vector<DenomFactor>& den);

}  // namespace qch
