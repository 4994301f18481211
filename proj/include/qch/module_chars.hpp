#pragma once

#include "qch/formal_char.hpp"
#include "qch/report.hpp"
#include "qch/root_datum.hpp"
#include "qch/weyl.hpp"

namespace qch {

/// Character of the quasi-Verma module with dot-lowest parameter w, lam:
/// e^{w . lam} / prod_{alpha > 0} (1 - e^{-alpha}).  The same fraction serves
/// the module and its contragradient dual, over the generic base or at a
/// root of unity.
RationalChar quasi_verma_char(const RootDatum& datum, const WeylElement& w, const Weight& lam);

struct WeylChar {
  RationalChar fraction;   // alternating sum of quasi-Verma characters
  FormalChar polynomial;   // the same character after exact division
};

/// Character of the Weyl module of dominant highest weight lam, as the
/// alternating sum sum_w (-1)^{l(w)} e^{w . lam} over the common quasi-Verma
/// denominator, together with its finite polynomial form.
/// Throws std::domain_error when lam is not dominant.
WeylChar weyl_char(const WeylGroup& group, const Weight& lam);
WeylChar weyl_char(const RootDatum& datum, const Weight& lam);

/// Product formula oracle for the dimension of the Weyl module: the ratio
/// prod_{alpha > 0} <lam + rho, alpha^vee> / <rho, alpha^vee>.  Independent
/// of the character-division route.
Int weyl_dimension(const RootDatum& datum, const Weight& lam);

/// Pairing <beta^vee, lam> = 2 (beta, lam) / (beta, beta) for a root beta
/// given in fundamental coordinates.  Throws std::domain_error when beta is
/// not in the root lattice.
Coord coroot_pairing(const RootDatum& datum, const Weight& beta, const Weight& lam);

/// Character of the simple module of highest weight k for rank one at an odd
/// root of unity of order ell, via the Steinberg factorization
/// k = k0 + ell*m with 0 <= k0 < ell: restricted factor of highest weight k0
/// times the Frobenius twist of the classical simple of highest weight m.
/// For m <= -1 the classical factor is the irreducible antidominant Verma
/// e^m / (1 - e^{-2}).  Weights are rank-one fundamental coordinates.
/// Throws std::domain_error unless ell is odd and >= 3.
RationalChar simple_sl2_char(Coord ell, Coord k);

/// Checks the rank-one identities expressing quasi-Verma characters through
/// simples, for highest weights 0 and k*ell, k = 1..k_max.  Exact fraction
/// equalities.
VerificationReport verify_sl2_decompositions(Coord ell, Coord k_max);

/// Checks ch M^e(mu) = ch M^s(s . mu) + ch W(mu) for mu = 0..mu_max,
/// separating ell-divisible from general mu in the check names.
VerificationReport verify_sl2_exact_sequences(Coord ell, Coord mu_max);

/// Both of the above with mu_max = k_max * ell.
VerificationReport verify_sl2_filtration_identities(Coord ell, Coord k_max);

}  // namespace qch
