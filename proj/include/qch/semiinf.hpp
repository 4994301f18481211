#pragma once

#include <vector>

#include "qch/formal_char.hpp"
#include "qch/weyl.hpp"

namespace qch {

/// Parameters of the bigraded character formulas: weights live on the
/// ell-scaled root lattice and t tracks the auxiliary cohomological grading.
struct SemiinfCharParams {
  RootDatum datum;
  Coord ell = 3;     // odd, >= 3
  Weight lambda;     // dominant
  /// Word of the twisting element used by chformula_general; empty = identity.
  std::vector<int> twist_word;
  /// Expansion window, counted in multiples of ell (so the plain height
  /// window is ell * truncation_height).
  Coord truncation_height = 0;
};

/// Throws std::domain_error for even or < 3 ell and non-dominant lambda,
/// std::invalid_argument for negative truncation_height, std::out_of_range
/// for a lambda/datum rank mismatch.
void validate_params(const SemiinfCharParams& p);

/// The summand attached to one group element:
///   t^{2 l(w) - #R+} e^{w(ell lambda)} /
///   [ prod_a (1 - e^{-ell a}) * prod_{w(a) > 0} (1 - t^2 e^{-ell a})
///                             * prod_{w(a) < 0} (1 - t^-2 e^{-ell a}) ],
/// products over positive roots a.  The global prefactor is already included,
/// so the terms sum to chformula.
RationalChar per_cell_term(const WeylGroup& group, const SemiinfCharParams& p, int w_id);

/// The full bigraded character, assembled as a single fraction over the
/// common denominator prod_a (1-e^{-ell a})(1-t^2 e^{-ell a})(1-t^-2 e^{-ell a})
/// with each summand's complementary factors multiplied into the numerator.
/// This is intentionally a different evaluation route from folding
/// per_cell_term with rc_add.  Requires an empty twist_word
/// (std::invalid_argument otherwise).
RationalChar chformula(const WeylGroup& group, const SemiinfCharParams& p);
RationalChar chformula(const SemiinfCharParams& p);

/// Twisted variant: prefactor t^{-#R+ + l(w)} with highest weight
/// ell*lambda + w.0, which must be dominant (std::domain_error otherwise);
/// the inner sum keeps the chformula factors.  Coincides with chformula when
/// the twist is the identity.
RationalChar chformula_general(const WeylGroup& group, const SemiinfCharParams& p);
RationalChar chformula_general(const SemiinfCharParams& p);

/// Truncated geometric expansion of chformula over the window of plain
/// height ell * truncation_height.
FormalChar chformula_window(const WeylGroup& group, const SemiinfCharParams& p);

/// Brute-force bigraded character of the first local cohomology of the
/// rank-one nilpotent cone N = {a^2 + bc = 0} supported on n+ = V(c) cap N,
/// computed as the monomial quotient O(N)[1/c] / O(N) with basis
/// {a^eps b^i c^j : eps in {0,1}, i >= 0, j <= -1}.  A monomial carries
/// torus weight (j - i) alpha and C*-degree eps + i + j; output keeps
/// |j - i| <= truncation.  Weights are plain alpha multiples; the
/// ell-dictionary to chformula is applied by the calibration step, ell is
/// validated here only so callers agree on the comparison target.
FormalChar nilcone_cech_oracle_rank1(Coord ell, Coord truncation);

/// Result of fitting the affine re-grading between oracle and chformula
/// output: weight m alpha -> weight_sign * weight_scale * m alpha and
/// C*-degree D -> t_scale * D + t_offset, fitted on the lowest-order terms.
/// The residual reference - regraded_oracle is data, not an error.
struct OracleCalibration {
  bool converged = false;
  int weight_sign = 0;
  Coord weight_scale = 0;
  Coord t_scale = 0;
  Coord t_offset = 0;
  FormalChar oracle;           // raw oracle output
  FormalChar regraded_oracle;  // oracle after the fitted re-grading
  FormalChar reference;        // truncated chformula window, A1, lambda = 0
  FormalChar residual;         // reference - regraded_oracle
};

OracleCalibration calibrate_rank1_oracle(Coord ell, Coord truncation);

}  // namespace qch
