#pragma once

#include <map>

#include "qch/laurent.hpp"
#include "qch/report.hpp"
#include "qch/types.hpp"

namespace qch {

/// Vector in the rank-one divided-power Verma module of highest weight mu:
/// a finite combination of basis vectors F^{(n)}p_mu, n >= 0, with exact
/// Laurent coefficients.  The basis vector of index n sits in weight mu - 2n.
class Sl2VermaVector {
 public:
  explicit Sl2VermaVector(Coord mu) : mu_(mu) {}
  static Sl2VermaVector highest_weight_vector(Coord mu);
  static Sl2VermaVector basis(Coord mu, Coord n, LaurentInt coeff = LaurentInt(Int(1)));

  Coord mu() const { return mu_; }
  bool is_zero() const { return entries_.empty(); }
  const std::map<Coord, LaurentInt>& entries() const { return entries_; }
  LaurentInt coeff(Coord n) const;
  void add(Coord n, const LaurentInt& c);

  Sl2VermaVector& operator+=(const Sl2VermaVector& o);
  friend Sl2VermaVector operator+(Sl2VermaVector a, const Sl2VermaVector& b) { return a += b; }
  Sl2VermaVector operator-() const;
  bool operator==(const Sl2VermaVector& o) const = default;

 private:
  Coord mu_;
  std::map<Coord, LaurentInt> entries_;
};

/// F^{(a)} F^{(n)} p = [a+n choose a] F^{(a+n)} p, extended linearly.
/// Throws std::out_of_range for a < 0.
Sl2VermaVector act_F_divided(Coord a, const Sl2VermaVector& x);

/// E^{(a)} F^{(b)} p_mu = [mu-b+a choose a] F^{(b-a)} p_mu for a <= b and 0
/// otherwise, the binomial taken with (possibly negative) top entry via the
/// exact product formula.  Extended linearly.  Throws std::out_of_range for
/// a < 0.
Sl2VermaVector act_E_divided(Coord a, const Sl2VermaVector& x);

/// Reduces every coefficient into the canonical window modulo the ell-th
/// cyclotomic polynomial.
Sl2VermaVector specialize_module(Coord ell, const Sl2VermaVector& x);

/// For each m in (mu, m_max], applies E^{(m-mu-1)} to F^{(m)}p_mu and checks
/// the result is a unit multiple of F^{(mu+1)}p_mu; the detail records the
/// computed sign against (-1)^(m-mu-1).  With ell > 0 the check is repeated
/// on cyclotomically reduced coefficients.  Throws std::invalid_argument for
/// mu < 0 or m_max <= mu.
VerificationReport verify_cogeneration(Coord mu, Coord m_max, Coord ell = 0);

/// Checks that the span of {F^{(n)}p_mu : n > mu} is preserved by every
/// E^{(a)}, a <= a_max, n <= n_max: no result may touch a basis vector of
/// index <= mu.  Offending (a, n) pairs are listed in the detail.  With
/// ell > 0 the entries are reduced cyclotomically first.  Throws
/// std::invalid_argument for mu < 0.
VerificationReport verify_kernel_closure(Coord mu, Coord n_max, Coord a_max, Coord ell = 0);

}  // namespace qch
