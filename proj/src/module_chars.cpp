#include "qch/module_chars.hpp"

#include <sstream>
#include <stdexcept>

namespace qch {

namespace {

std::vector<DenomFactor> quasi_verma_denominator(const RootDatum& datum) {
  std::vector<DenomFactor> den;
  for (const Weight& alpha : datum.positive_roots) den.push_back(DenomFactor{-alpha, 0, 1});
  return den;
}

}  // namespace

RationalChar quasi_verma_char(const RootDatum& datum, const WeylElement& w, const Weight& lam) {
  FormalChar num = FormalChar::monomial(dot_action(datum, w, lam), 0, Int(1));
  return RationalChar(std::move(num), quasi_verma_denominator(datum));
}

WeylChar weyl_char(const WeylGroup& group, const Weight& lam) {
  if (!is_dominant(lam)) throw std::domain_error("weyl_char: weight is not dominant");
  const RootDatum& datum = group.datum();
  FormalChar num;
  for (const WeylElement& w : group.elements()) {
    Int sign = (w.length % 2 == 0) ? 1 : -1;
    num.add_term(dot_action(datum, w, lam), 0, sign);
  }
  WeylChar out;
  out.polynomial = divide_exact(datum, num, quasi_verma_denominator(datum));
  out.fraction = RationalChar(std::move(num), quasi_verma_denominator(datum));
  return out;
}

WeylChar weyl_char(const RootDatum& datum, const Weight& lam) {
  return weyl_char(WeylGroup::generate(datum), lam);
}

Coord coroot_pairing(const RootDatum& datum, const Weight& beta, const Weight& lam) {
  auto rc = root_coords(datum, beta);
  if (!rc) throw std::domain_error("coroot_pairing: beta not in the root lattice");
  int n = datum.cartan.rank;
  Coord norm = 0, dot = 0;
  for (int j = 0; j < n; ++j) {
    norm += (*rc)[j] * datum.cartan.symmetrizer[j] * beta.coords[j];
    dot += (*rc)[j] * datum.cartan.symmetrizer[j] * lam.coords[j];
  }
  if (norm <= 0) throw std::domain_error("coroot_pairing: beta has nonpositive norm");
  if ((2 * dot) % norm != 0) throw std::logic_error("coroot_pairing: non-integral value");
  return 2 * dot / norm;
}

Int weyl_dimension(const RootDatum& datum, const Weight& lam) {
  if (!is_dominant(lam)) throw std::domain_error("weyl_dimension: weight is not dominant");
  Int num = 1, den = 1;
  for (const Weight& alpha : datum.positive_roots) {
    num *= static_cast<long>(coroot_pairing(datum, alpha, lam + datum.rho));
    den *= static_cast<long>(coroot_pairing(datum, alpha, datum.rho));
  }
  Int q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (r != 0) throw std::logic_error("weyl_dimension: product ratio not integral");
  return q;
}

namespace {

Weight rank1(Coord x) { return Weight{{x}}; }

// Character of the classical (v = 1) simple of highest weight m: the full
// (m+1)-dimensional string for m >= 0, the antidominant Verma for m <= -1.
RationalChar classical_simple_scaled(Coord m, Coord scale) {
  if (m >= 0) {
    FormalChar num;
    for (Coord j = 0; j <= m; ++j) num.add_term(rank1(scale * (m - 2 * j)), 0, Int(1));
    return RationalChar(std::move(num));
  }
  FormalChar num = FormalChar::monomial(rank1(scale * m), 0, Int(1));
  return RationalChar(std::move(num), {DenomFactor{rank1(-2 * scale), 0, 1}});
}

}  // namespace

RationalChar simple_sl2_char(Coord ell, Coord k) {
  if (ell < 3 || ell % 2 == 0)
    throw std::domain_error("simple_sl2_char: ell must be odd and >= 3");
  Coord k0 = ((k % ell) + ell) % ell;
  Coord m = (k - k0) / ell;
  FormalChar restricted;
  for (Coord j = 0; j <= k0; ++j) restricted.add_term(rank1(k0 - 2 * j), 0, Int(1));
  return rc_mul(RationalChar(std::move(restricted)), classical_simple_scaled(m, ell));
}

VerificationReport verify_sl2_decompositions(Coord ell, Coord k_max) {
  VerificationReport report;
  RootDatum a1 = build_root_datum("A1");
  WeylGroup w = WeylGroup::generate(a1);
  const WeylElement& e = w.element(0);
  const WeylElement& s = w.element(1);
  auto L = [&](Coord k) { return simple_sl2_char(ell, k); };
  auto name = [&](const char* base, Coord k) {
    std::ostringstream os;
    os << base << "[ell=" << ell << ",k=" << k << "]";
    return os.str();
  };

  RationalChar me0 = quasi_verma_char(a1, e, rank1(0));
  report.add(name("lowest_weight_string_e", 0),
             rc_equal(a1, me0, rc_add(rc_add(L(0), L(-2)), L(-2 * ell))));
  RationalChar ms0 = quasi_verma_char(a1, s, rank1(0));
  report.add(name("lowest_weight_string_s", 0),
             rc_equal(a1, ms0, rc_add(L(-2), L(-2 * ell))));

  for (Coord k = 1; k <= k_max; ++k) {
    RationalChar me = quasi_verma_char(a1, e, rank1(k * ell));
    RationalChar sum_e = rc_add(rc_add(L(k * ell), L(k * ell - 2)),
                                rc_add(L(-k * ell - 2), L(-(k + 2) * ell)));
    report.add(name("simple_decomposition_e", k), rc_equal(a1, me, sum_e));

    RationalChar ms = quasi_verma_char(a1, s, rank1(k * ell));
    RationalChar sum_s = rc_add(L(-k * ell - 2), L(-(k + 2) * ell));
    report.add(name("simple_decomposition_s", k), rc_equal(a1, ms, sum_s));
  }
  return report;
}

VerificationReport verify_sl2_exact_sequences(Coord ell, Coord mu_max) {
  VerificationReport report;
  RootDatum a1 = build_root_datum("A1");
  WeylGroup w = WeylGroup::generate(a1);
  const WeylElement& e = w.element(0);
  const WeylElement& s = w.element(1);
  if (ell < 3 || ell % 2 == 0)
    throw std::domain_error("verify_sl2_exact_sequences: ell must be odd and >= 3");

  for (Coord mu = 0; mu <= mu_max; ++mu) {
    RationalChar me = quasi_verma_char(a1, e, rank1(mu));
    RationalChar ms = quasi_verma_char(a1, s, rank1(mu));
    RationalChar weyl = RationalChar(weyl_char(w, rank1(mu)).polynomial);
    const char* base =
        (mu % ell == 0) ? "verma_sequence_mu_divisible" : "verma_sequence_mu_general";
    std::ostringstream os;
    os << base << "[ell=" << ell << ",mu=" << mu << "]";
    report.add(os.str(), rc_equal(a1, me, rc_add(ms, weyl)));
  }
  return report;
}

VerificationReport verify_sl2_filtration_identities(Coord ell, Coord k_max) {
  VerificationReport report = verify_sl2_decompositions(ell, k_max);
  VerificationReport sequences = verify_sl2_exact_sequences(ell, k_max * ell);
  for (auto& check : sequences.checks) report.checks.push_back(std::move(check));
  return report;
}

}  // namespace qch
