#include "qch/qsl2.hpp"

#include <sstream>
#include <stdexcept>

namespace qch {

Sl2VermaVector Sl2VermaVector::highest_weight_vector(Coord mu) { return basis(mu, 0); }

Sl2VermaVector Sl2VermaVector::basis(Coord mu, Coord n, LaurentInt coeff) {
  if (n < 0) throw std::out_of_range("Sl2VermaVector: negative basis index");
  Sl2VermaVector v(mu);
  v.add(n, coeff);
  return v;
}

LaurentInt Sl2VermaVector::coeff(Coord n) const {
  auto it = entries_.find(n);
  return it == entries_.end() ? LaurentInt() : it->second;
}

void Sl2VermaVector::add(Coord n, const LaurentInt& c) {
  if (c.is_zero()) return;
  auto it = entries_.find(n);
  if (it == entries_.end()) {
    entries_.emplace(n, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) entries_.erase(it);
  }
}

Sl2VermaVector& Sl2VermaVector::operator+=(const Sl2VermaVector& o) {
  for (const auto& [n, c] : o.entries_) add(n, c);
  return *this;
}

Sl2VermaVector Sl2VermaVector::operator-() const {
  Sl2VermaVector r(mu_);
  for (const auto& [n, c] : entries_) r.entries_.emplace(n, -c);
  return r;
}

Sl2VermaVector act_F_divided(Coord a, const Sl2VermaVector& x) {
  if (a < 0) throw std::out_of_range("act_F_divided: negative power");
  Sl2VermaVector r(x.mu());
  for (const auto& [n, c] : x.entries()) r.add(n + a, c * gauss_binomial(n + a, a));
  return r;
}

Sl2VermaVector act_E_divided(Coord a, const Sl2VermaVector& x) {
  if (a < 0) throw std::out_of_range("act_E_divided: negative power");
  Sl2VermaVector r(x.mu());
  for (const auto& [b, c] : x.entries()) {
    if (a > b) continue;
    r.add(b - a, c * gauss_binomial(x.mu() - b + a, a));
  }
  return r;
}

Sl2VermaVector specialize_module(Coord ell, const Sl2VermaVector& x) {
  Sl2VermaVector r(x.mu());
  for (const auto& [n, c] : x.entries()) r.add(n, cyclotomic_reduce(c, ell));
  return r;
}

VerificationReport verify_cogeneration(Coord mu, Coord m_max, Coord ell) {
  if (mu < 0 || m_max <= mu)
    throw std::invalid_argument("verify_cogeneration: need mu >= 0 and m_max > mu");
  VerificationReport report;
  for (Coord m = mu + 1; m <= m_max; ++m) {
    Sl2VermaVector y = act_E_divided(m - mu - 1, Sl2VermaVector::basis(mu, m));
    if (ell > 0) y = specialize_module(ell, y);
    std::ostringstream name;
    name << "cogeneration[mu=" << mu << ",m=" << m;
    if (ell > 0) name << ",ell=" << ell;
    name << "]";

    LaurentInt c = y.coeff(mu + 1);
    bool unit = (c == LaurentInt(Int(1)) || c == LaurentInt(Int(-1)));
    bool single = y.entries().size() == 1;
    Coord expected_sign = (m - mu - 1) % 2 == 0 ? 1 : -1;
    std::ostringstream detail;
    if (single && unit) {
      Coord got = (c == LaurentInt(Int(1))) ? 1 : -1;
      detail << "coefficient " << (got > 0 ? "+1" : "-1")
             << (got == expected_sign ? " matches" : " DIFFERS from")
             << " (-1)^(m-mu-1)";
    } else {
      detail << "got " << y.entries().size() << " terms, coefficient on F^(mu+1): " << c.str();
    }
    report.add(name.str(), single && unit, detail.str());
  }
  return report;
}

VerificationReport verify_kernel_closure(Coord mu, Coord n_max, Coord a_max, Coord ell) {
  if (mu < 0) throw std::invalid_argument("verify_kernel_closure: mu must be >= 0");
  VerificationReport report;
  std::ostringstream bad;
  int violations = 0;
  for (Coord n = mu + 1; n <= n_max; ++n)
    for (Coord a = 0; a <= a_max; ++a) {
      Sl2VermaVector y = act_E_divided(a, Sl2VermaVector::basis(mu, n));
      if (ell > 0) y = specialize_module(ell, y);
      for (const auto& [j, c] : y.entries())
        if (j <= mu) {
          ++violations;
          if (violations <= 8) bad << " (a=" << a << ",n=" << n << ",j=" << j << ")";
        }
    }
  std::ostringstream name;
  name << "kernel_closure[mu=" << mu << ",n<=" << n_max << ",a<=" << a_max;
  if (ell > 0) name << ",ell=" << ell;
  name << "]";
  report.add(name.str(), violations == 0,
             violations == 0 ? "span{F^(n)p : n > mu} is E-stable"
                             : "escaped the span at" + bad.str());
  return report;
}

}  // namespace qch
