#include "qch/formal_char.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace qch {

FormalChar FormalChar::monomial(Weight w, Coord t_degree, Int coeff) {
  FormalChar r;
  if (coeff != 0) r.terms_[{std::move(w), t_degree}] = std::move(coeff);
  return r;
}

FormalChar FormalChar::one(int rank) {
  Weight zero;
  zero.coords.assign(rank, 0);
  return monomial(std::move(zero), 0, Int(1));
}

Int FormalChar::coeff(const Weight& w, Coord t_degree) const {
  auto it = terms_.find({w, t_degree});
  return it == terms_.end() ? Int(0) : it->second;
}

void FormalChar::add_term(const Weight& w, Coord t_degree, const Int& coeff) {
  if (coeff == 0) return;
  Key k{w, t_degree};
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(std::move(k), coeff);
  } else {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

FormalChar FormalChar::operator-() const {
  FormalChar r;
  for (const auto& [k, c] : terms_) r.terms_[k] = -c;
  return r;
}

FormalChar& FormalChar::operator+=(const FormalChar& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
  return *this;
}

FormalChar& FormalChar::operator-=(const FormalChar& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
  return *this;
}

FormalChar operator*(const FormalChar& a, const FormalChar& b) {
  FormalChar r;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_)
      r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
  return r;
}

FormalChar operator*(const Int& c, const FormalChar& a) {
  FormalChar r;
  if (c == 0) return r;
  for (const auto& [k, x] : a.terms_) r.terms_[k] = c * x;
  return r;
}

Int FormalChar::eval_at_one() const {
  Int s = 0;
  for (const auto& [k, c] : terms_) s += c;
  return s;
}

RationalChar::RationalChar(FormalChar num, std::vector<DenomFactor> den)
    : num_(std::move(num)) {
  std::map<std::pair<Weight, Coord>, long> mult;
  for (const auto& f : den) {
    if (f.multiplicity <= 0)
      throw std::invalid_argument("RationalChar: factor multiplicity must be positive");
    mult[{f.shift, f.t_degree}] += f.multiplicity;
  }
  for (const auto& [key, m] : mult)
    den_.push_back(DenomFactor{key.first, key.second, static_cast<int>(m)});
}

FormalChar denom_factor_poly(const DenomFactor& f, int rank) {
  FormalChar base = FormalChar::one(rank) - FormalChar::monomial(f.shift, f.t_degree, Int(1));
  FormalChar r = FormalChar::one(rank);
  for (int i = 0; i < f.multiplicity; ++i) r *= base;
  return r;
}

namespace {

int rank_of(const RationalChar& a, const RationalChar& b) {
  if (!a.numerator().is_zero()) return static_cast<int>(a.numerator().terms().begin()->first.first.coords.size());
  if (!a.denominator().empty()) return static_cast<int>(a.denominator()[0].shift.coords.size());
  if (!b.numerator().is_zero()) return static_cast<int>(b.numerator().terms().begin()->first.first.coords.size());
  if (!b.denominator().empty()) return static_cast<int>(b.denominator()[0].shift.coords.size());
  return 0;
}

void check_negative_heights(const RootDatum& datum, const RationalChar& a) {
  for (const auto& f : a.denominator())
    if (scaled_height(datum, f.shift) >= 0)
      throw std::domain_error("denominator factor with nonnegative height");
}

// Multiset difference of factor lists (both sorted and merged).
std::vector<DenomFactor> factor_difference(const std::vector<DenomFactor>& all,
                                           const std::vector<DenomFactor>& sub) {
  std::vector<DenomFactor> out;
  auto find_mult = [&](const DenomFactor& f) {
    for (const auto& g : sub)
      if (g.shift == f.shift && g.t_degree == f.t_degree) return g.multiplicity;
    return 0;
  };
  for (const auto& f : all) {
    int m = f.multiplicity - find_mult(f);
    if (m < 0) throw std::logic_error("factor_difference: negative multiplicity");
    if (m > 0) out.push_back(DenomFactor{f.shift, f.t_degree, m});
  }
  return out;
}

FormalChar factors_poly(const std::vector<DenomFactor>& fs, int rank) {
  FormalChar r = FormalChar::one(rank);
  for (const auto& f : fs) r *= denom_factor_poly(f, rank);
  return r;
}

}  // namespace

bool rc_equal(const RootDatum& datum, const RationalChar& a, const RationalChar& b) {
  check_negative_heights(datum, a);
  check_negative_heights(datum, b);
  int rank = datum.cartan.rank;
  // Cancel the shared part of the denominators, then cross-multiply.  Valid
  // because the ambient Laurent ring is an integral domain and no factor is
  // zero.
  std::vector<DenomFactor> common;
  for (const auto& f : a.denominator())
    for (const auto& g : b.denominator())
      if (f.shift == g.shift && f.t_degree == g.t_degree)
        common.push_back(
            DenomFactor{f.shift, f.t_degree, std::min(f.multiplicity, g.multiplicity)});
  std::vector<DenomFactor> ea = factor_difference(a.denominator(), common);
  std::vector<DenomFactor> eb = factor_difference(b.denominator(), common);
  return a.numerator() * factors_poly(eb, rank) == b.numerator() * factors_poly(ea, rank);
}

RationalChar rc_add(const RationalChar& a, const RationalChar& b) {
  int rank = rank_of(a, b);
  std::map<std::pair<Weight, Coord>, int> mult;
  for (const auto& f : a.denominator())
    mult[{f.shift, f.t_degree}] = f.multiplicity;
  for (const auto& f : b.denominator()) {
    int& m = mult[{f.shift, f.t_degree}];
    m = std::max(m, f.multiplicity);
  }
  std::vector<DenomFactor> united;
  for (const auto& [key, m] : mult) united.push_back(DenomFactor{key.first, key.second, m});
  FormalChar num = a.numerator() * factors_poly(factor_difference(united, a.denominator()), rank) +
                   b.numerator() * factors_poly(factor_difference(united, b.denominator()), rank);
  return RationalChar(std::move(num), std::move(united));
}

RationalChar rc_sub(const RationalChar& a, const RationalChar& b) {
  return rc_add(a, rc_scale(Int(-1), b));
}

RationalChar rc_mul(const RationalChar& a, const RationalChar& b) {
  std::vector<DenomFactor> den = a.denominator();
  den.insert(den.end(), b.denominator().begin(), b.denominator().end());
  return RationalChar(a.numerator() * b.numerator(), std::move(den));
}

RationalChar rc_scale(const Int& c, const RationalChar& a) {
  return RationalChar(c * a.numerator(), a.denominator());
}

FormalChar expand_truncated(const RationalChar& c, const RootDatum& datum, Coord max_height) {
  if (max_height < 0) throw std::invalid_argument("expand_truncated: negative height window");
  check_negative_heights(datum, c);
  if (c.numerator().is_zero()) return {};

  Int top = scaled_height(datum, c.numerator().terms().begin()->first.first);
  for (const auto& [k, coeff] : c.numerator().terms())
    top = std::max(top, scaled_height(datum, k.first));
  // Keep mu iff height(top_wt - mu) <= max_height, i.e. det-scaled height of
  // mu stays >= floor.
  Int floor = top - datum.det * static_cast<long>(max_height);

  FormalChar acc;
  for (const auto& [k, coeff] : c.numerator().terms())
    if (scaled_height(datum, k.first) >= floor) acc.add_term(k.first, k.second, coeff);

  for (const auto& f : c.denominator()) {
    Int drop = scaled_height(datum, f.shift);
    for (int rep = 0; rep < f.multiplicity; ++rep) {
      FormalChar next;
      for (const auto& [k, coeff] : acc.terms()) {
        Weight w = k.first;
        Coord t = k.second;
        Int h = scaled_height(datum, w);
        while (h >= floor) {
          next.add_term(w, t, coeff);
          w = w + f.shift;
          t += f.t_degree;
          h += drop;
        }
      }
      acc = std::move(next);
    }
  }
  return acc;
}

FormalChar divide_exact(const RootDatum& datum, const FormalChar& num,
                        const std::vector<DenomFactor>& den) {
  FormalChar cur = num;
  for (const auto& f : den) {
    for (int rep = 0; rep < f.multiplicity; ++rep) {
      if (cur.is_zero()) break;
      Int drop = scaled_height(datum, f.shift);
      if (drop >= 0) throw std::domain_error("divide_exact: factor with nonnegative height");

      // Greedy top-down division by (1 - e^shift t^d): repeatedly peel the
      // highest remaining term into the quotient.  In an exact division the
      // remainder never reaches below the dividend's lowest height, which
      // bounds the loop.
      using OrderKey = std::tuple<Int, Weight, Coord>;
      std::map<OrderKey, Int> rem;
      Int low = scaled_height(datum, cur.terms().begin()->first.first);
      for (const auto& [k, coeff] : cur.terms()) {
        Int h = scaled_height(datum, k.first);
        low = std::min(low, h);
        rem[{h, k.first, k.second}] = coeff;
      }
      FormalChar quot;
      while (!rem.empty()) {
        auto it = std::prev(rem.end());
        auto [h, w, t] = it->first;
        Int coeff = it->second;
        rem.erase(it);
        if (h < low) throw std::domain_error("divide_exact: inexact division");
        quot.add_term(w, t, coeff);
        OrderKey shifted{h + drop, w + f.shift, t + f.t_degree};
        auto jt = rem.find(shifted);
        if (jt == rem.end()) {
          rem.emplace(std::move(shifted), coeff);
        } else {
          jt->second += coeff;
          if (jt->second == 0) rem.erase(jt);
        }
      }
      cur = std::move(quot);
    }
  }
  return cur;
}

}  // namespace qch
