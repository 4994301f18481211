#pragma once

#include <map>
#include <string>
#include <vector>

#include "qch/types.hpp"

namespace qch {

/// Element of the ring Z[v, v^-1] with exact integer coefficients.
///
/// Stored as a sparse exponent -> coefficient map with no zero entries,
/// so equality is structural and all ring operations are exact.
class LaurentInt {
 public:
  LaurentInt() = default;
  explicit LaurentInt(Int constant);
  static LaurentInt monomial(Int coeff, Coord exp);
  static LaurentInt quantum_integer(Coord n);    // [n] = (v^n - v^-n)/(v - v^-1)
  static LaurentInt quantum_factorial(Coord n);  // [n]!

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const;
  const std::map<Coord, Int>& coeffs() const { return coeffs_; }
  Int coeff(Coord exp) const;
  Coord min_exp() const;  // requires nonzero
  Coord max_exp() const;

  LaurentInt operator-() const;
  LaurentInt& operator+=(const LaurentInt& o);
  LaurentInt& operator-=(const LaurentInt& o);
  friend LaurentInt operator+(LaurentInt a, const LaurentInt& b) { return a += b; }
  friend LaurentInt operator-(LaurentInt a, const LaurentInt& b) { return a -= b; }
  friend LaurentInt operator*(const LaurentInt& a, const LaurentInt& b);
  LaurentInt& operator*=(const LaurentInt& o) { return *this = *this * o; }
  bool operator==(const LaurentInt& o) const = default;

  /// Exact division; throws std::domain_error when the remainder is nonzero.
  LaurentInt divide_exact(const LaurentInt& divisor) const;
  bool divisible_by(const LaurentInt& divisor) const;

  LaurentInt bar() const;   // v <-> v^-1
  Int eval_at_one() const;  // classical limit v = 1
  bool bar_symmetric() const { return *this == bar(); }

  std::string str() const;  // human-readable, exponents descending

 private:
  void set(Coord exp, Int c);
  std::map<Coord, Int> coeffs_;
};

/// Gaussian binomial with arbitrary (possibly negative) integer top entry,
/// as the product  prod_{s=1..n} [top - s + 1] / [s].  Every prefix of the
/// product is itself a binomial, so the stepwise division is exact.
LaurentInt gauss_binomial(Coord top, Coord n);

/// Gaussian binomial [m choose n] for 0 <= n <= m; throws std::out_of_range
/// outside that range.  Symmetric under v <-> v^-1.
LaurentInt laurent_qbinom(Coord m, Coord n);

/// The ell-th cyclotomic polynomial as an element of Z[v,v^-1] (plain
/// polynomial support).
LaurentInt cyclotomic_polynomial(Coord ell);

/// Canonical representative of x in Z[v,v^-1]/(Phi_ell): v-degree window
/// [0, phi(ell)-1].  Requires ell odd and >= 3.
LaurentInt cyclotomic_reduce(const LaurentInt& x, Coord ell);

}  // namespace qch
