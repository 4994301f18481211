#include "qch/semiinf.hpp"

#include <cstdlib>
#include <stdexcept>

namespace qch {

namespace {

bool positive_after(const RootDatum& datum, const WeylElement& w, const Weight& alpha) {
  return scaled_height(datum, weyl_action(w, alpha)) > 0;
}

// Numerator and full common denominator of the W-sum with an extra constant
// t-shift; every summand's complementary factors are multiplied in.
RationalChar assemble_sum(const WeylGroup& group, const SemiinfCharParams& p,
                          Coord extra_t) {
  const RootDatum& datum = group.datum();
  const int rank = datum.cartan.rank;
  const Coord npos = static_cast<Coord>(datum.positive_roots.size());
  const Weight top = p.ell * p.lambda;

  std::vector<DenomFactor> full;
  for (const Weight& alpha : datum.positive_roots) {
    Weight shift = -(p.ell * alpha);
    full.push_back({shift, 0, 1});
    full.push_back({shift, 2, 1});
    full.push_back({shift, -2, 1});
  }

  FormalChar num;
  for (int w = 0; w < static_cast<int>(group.size()); ++w) {
    const WeylElement& el = group.element(w);
    FormalChar term = FormalChar::monomial(
        weyl_action(el, top), 2 * el.length - npos + extra_t, 1);
    for (const Weight& alpha : datum.positive_roots) {
      Weight shift = -(p.ell * alpha);
      Coord complement_t = positive_after(datum, el, alpha) ? -2 : 2;
      term *= denom_factor_poly({shift, complement_t, 1}, rank);
    }
    num += term;
  }
  return RationalChar(std::move(num), std::move(full));
}

}  // namespace

void validate_params(const SemiinfCharParams& p) {
  if (p.ell < 3 || p.ell % 2 == 0)
    throw std::domain_error("semiinf: ell must be odd and >= 3");
  if (static_cast<int>(p.lambda.coords.size()) != p.datum.cartan.rank)
    throw std::out_of_range("semiinf: lambda rank mismatch");
  if (!is_dominant(p.lambda))
    throw std::domain_error("semiinf: lambda must be dominant");
  if (p.truncation_height < 0)
    throw std::invalid_argument("semiinf: truncation_height must be >= 0");
}

RationalChar per_cell_term(const WeylGroup& group, const SemiinfCharParams& p, int w_id) {
  validate_params(p);
  const RootDatum& datum = group.datum();
  const Coord npos = static_cast<Coord>(datum.positive_roots.size());
  const WeylElement& w = group.element(w_id);

  FormalChar num = FormalChar::monomial(weyl_action(w, p.ell * p.lambda),
                                        2 * w.length - npos, 1);
  std::vector<DenomFactor> den;
  for (const Weight& alpha : datum.positive_roots) {
    Weight shift = -(p.ell * alpha);
    den.push_back({shift, 0, 1});
    den.push_back({shift, positive_after(datum, w, alpha) ? 2 : -2, 1});
  }
  return RationalChar(std::move(num), std::move(den));
}

RationalChar chformula(const WeylGroup& group, const SemiinfCharParams& p) {
  validate_params(p);
  if (!p.twist_word.empty())
    throw std::invalid_argument(
        "semiinf: chformula takes an identity twist; use chformula_general");
  return assemble_sum(group, p, 0);
}

RationalChar chformula(const SemiinfCharParams& p) {
  WeylGroup group = WeylGroup::generate(p.datum);
  return chformula(group, p);
}

RationalChar chformula_general(const WeylGroup& group, const SemiinfCharParams& p) {
  validate_params(p);
  const RootDatum& datum = group.datum();
  const int tw = group.element_of_word(p.twist_word);
  const Weight zero{std::vector<Coord>(datum.cartan.rank, 0)};
  const Weight highest =
      p.ell * p.lambda + dot_action(datum, group.element(tw), zero);
  if (!is_dominant(highest))
    throw std::domain_error(
        "semiinf: ell*lambda + w.0 must be dominant for the twisted formula");
  return assemble_sum(group, p, group.length(tw));
}

RationalChar chformula_general(const SemiinfCharParams& p) {
  WeylGroup group = WeylGroup::generate(p.datum);
  return chformula_general(group, p);
}

FormalChar chformula_window(const WeylGroup& group, const SemiinfCharParams& p) {
  return expand_truncated(chformula(group, p), group.datum(),
                          p.ell * p.truncation_height);
}

FormalChar nilcone_cech_oracle_rank1(Coord ell, Coord truncation) {
  if (ell < 3 || ell % 2 == 0)
    throw std::domain_error("semiinf: ell must be odd and >= 3");
  if (truncation < 0)
    throw std::invalid_argument("semiinf: truncation must be >= 0");
  FormalChar out;
  // weight (j - i) alpha = -m alpha, m >= 1; alpha has coordinate 2
  for (Coord m = 1; m <= truncation; ++m) {
    for (Coord j = -m; j <= -1; ++j) {
      Coord i = j + m;
      for (Coord eps = 0; eps <= 1; ++eps)
        out.add_term(Weight{{-2 * m}}, eps + i + j, 1);
    }
  }
  return out;
}

OracleCalibration calibrate_rank1_oracle(Coord ell, Coord truncation) {
  OracleCalibration cal;
  cal.oracle = nilcone_cech_oracle_rank1(ell, truncation);

  RootDatum datum = build_root_datum("A1");
  WeylGroup group = WeylGroup::generate(datum);
  SemiinfCharParams p{datum, ell, Weight{{0}}, {}, truncation};
  cal.reference = chformula_window(group, p);

  // Lowest-order data: the closest-to-top nonzero weight on each side, with
  // its degree window.  Terms are keyed (weight, degree) ascending, so per
  // fixed weight the degrees come sorted.
  Coord oracle_top = 0;  // largest (least negative) oracle weight coordinate
  std::vector<Coord> oracle_window;
  for (const auto& [key, coeff] : cal.oracle.terms()) {
    Coord c = key.first.coords[0];
    if (oracle_top == 0 || c > oracle_top) oracle_top = c;
  }
  for (const auto& [key, coeff] : cal.oracle.terms())
    if (key.first.coords[0] == oracle_top) oracle_window.push_back(key.second);

  Coord ref_top = 0;  // largest nonzero reference weight coordinate by |.|
  for (const auto& [key, coeff] : cal.reference.terms()) {
    Coord c = key.first.coords[0];
    if (c == 0) continue;
    if (ref_top == 0 || std::abs(c) < std::abs(ref_top)) ref_top = c;
  }
  std::vector<Coord> ref_window;
  for (const auto& [key, coeff] : cal.reference.terms())
    if (key.first.coords[0] == ref_top) ref_window.push_back(key.second);

  if (oracle_top == 0 || ref_top == 0 || oracle_window.size() < 2 ||
      ref_window.size() < 2)
    return cal;  // not enough low-order terms, calibration does not converge
  if (ref_top % oracle_top != 0) return cal;
  const Coord ratio = ref_top / oracle_top;

  const Coord dmin = oracle_window.front(), dmax = oracle_window.back();
  const Coord tmin = ref_window.front(), tmax = ref_window.back();
  if (dmax == dmin || (tmax - tmin) % (dmax - dmin) != 0) return cal;

  cal.weight_sign = ratio < 0 ? -1 : 1;
  cal.weight_scale = std::abs(ratio);
  cal.t_scale = (tmax - tmin) / (dmax - dmin);
  cal.t_offset = tmin - cal.t_scale * dmin;
  cal.converged = true;

  for (const auto& [key, coeff] : cal.oracle.terms())
    cal.regraded_oracle.add_term(
        Weight{{cal.weight_sign * cal.weight_scale * key.first.coords[0]}},
        cal.t_scale * key.second + cal.t_offset, coeff);
  cal.residual = cal.reference - cal.regraded_oracle;
  return cal;
}

}  // namespace qch
