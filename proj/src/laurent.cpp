#include "qch/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace qch {

LaurentInt::LaurentInt(Int constant) {
  if (constant != 0) coeffs_[0] = std::move(constant);
}

LaurentInt LaurentInt::monomial(Int coeff, Coord exp) {
  LaurentInt r;
  if (coeff != 0) r.coeffs_[exp] = std::move(coeff);
  return r;
}

LaurentInt LaurentInt::quantum_integer(Coord n) {
  // [n] = v^{n-1} + v^{n-3} + ... + v^{1-n};  [-n] = -[n], [0] = 0.
  LaurentInt r;
  Coord a = n < 0 ? -n : n;
  for (Coord e = a - 1; e >= 1 - a; e -= 2) r.coeffs_[e] = (n < 0) ? -1 : 1;
  return r;
}

LaurentInt LaurentInt::quantum_factorial(Coord n) {
  if (n < 0) throw std::out_of_range("quantum_factorial: negative argument");
  LaurentInt r(Int(1));
  for (Coord s = 2; s <= n; ++s) r *= quantum_integer(s);
  return r;
}

bool LaurentInt::is_one() const {
  return coeffs_.size() == 1 && coeffs_.begin()->first == 0 && coeffs_.begin()->second == 1;
}

Int LaurentInt::coeff(Coord exp) const {
  auto it = coeffs_.find(exp);
  return it == coeffs_.end() ? Int(0) : it->second;
}

Coord LaurentInt::min_exp() const { return coeffs_.begin()->first; }
Coord LaurentInt::max_exp() const { return coeffs_.rbegin()->first; }

void LaurentInt::set(Coord exp, Int c) {
  if (c == 0)
    coeffs_.erase(exp);
  else
    coeffs_[exp] = std::move(c);
}

LaurentInt LaurentInt::operator-() const {
  LaurentInt r;
  for (const auto& [e, c] : coeffs_) r.coeffs_[e] = -c;
  return r;
}

LaurentInt& LaurentInt::operator+=(const LaurentInt& o) {
  for (const auto& [e, c] : o.coeffs_) {
    auto it = coeffs_.find(e);
    if (it == coeffs_.end()) {
      coeffs_[e] = c;
    } else {
      it->second += c;
      if (it->second == 0) coeffs_.erase(it);
    }
  }
  return *this;
}

LaurentInt& LaurentInt::operator-=(const LaurentInt& o) {
  for (const auto& [e, c] : o.coeffs_) {
    auto it = coeffs_.find(e);
    if (it == coeffs_.end()) {
      coeffs_[e] = -c;
    } else {
      it->second -= c;
      if (it->second == 0) coeffs_.erase(it);
    }
  }
  return *this;
}

LaurentInt operator*(const LaurentInt& a, const LaurentInt& b) {
  LaurentInt r;
  for (const auto& [ea, ca] : a.coeffs_)
    for (const auto& [eb, cb] : b.coeffs_) {
      Int& slot = r.coeffs_[ea + eb];
      slot += ca * cb;
    }
  for (auto it = r.coeffs_.begin(); it != r.coeffs_.end();)
    it = (it->second == 0) ? r.coeffs_.erase(it) : std::next(it);
  return r;
}

LaurentInt LaurentInt::divide_exact(const LaurentInt& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("LaurentInt: division by zero");
  if (is_zero()) return {};
  // Shift both operands to honest polynomials; the quotient picks up the
  // difference of the shifts.  Long division from the top recovers integer
  // quotient coefficients iff the division is exact.
  Coord shift = min_exp() - divisor.min_exp();
  LaurentInt rem = *this;
  LaurentInt quot;
  const Coord dtop = divisor.max_exp();
  const Int& dlead = divisor.coeffs_.rbegin()->second;
  while (!rem.is_zero()) {
    Coord rtop = rem.max_exp();
    Int q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rem.coeffs_.rbegin()->second.get_mpz_t(),
                dlead.get_mpz_t());
    if (r != 0) throw std::domain_error("LaurentInt: inexact division (coefficient)");
    Coord qexp = rtop - dtop;
    if (qexp < shift) throw std::domain_error("LaurentInt: inexact division (degree)");
    quot.set(qexp, q);
    for (const auto& [e, c] : divisor.coeffs_) {
      auto it = rem.coeffs_.find(e + qexp);
      Int delta = q * c;
      if (it == rem.coeffs_.end()) {
        rem.coeffs_[e + qexp] = -delta;
      } else {
        it->second -= delta;
        if (it->second == 0) rem.coeffs_.erase(it);
      }
    }
  }
  return quot;
}

bool LaurentInt::divisible_by(const LaurentInt& divisor) const {
  try {
    divide_exact(divisor);
    return true;
  } catch (const std::domain_error&) {
    return false;
  }
}

LaurentInt LaurentInt::bar() const {
  LaurentInt r;
  for (const auto& [e, c] : coeffs_) r.coeffs_[-e] = c;
  return r;
}

Int LaurentInt::eval_at_one() const {
  Int s = 0;
  for (const auto& [e, c] : coeffs_) s += c;
  return s;
}

std::string LaurentInt::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!first) os << (c > 0 ? " + " : " - ");
    Int a = first ? c : Int(abs(c));
    first = false;
    if (e == 0) {
      os << a.get_str();
    } else {
      if (a != 1 && a != -1)
        os << a.get_str() << "*";
      else if (a == -1)
        os << "-";
      os << "v";
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

LaurentInt gauss_binomial(Coord top, Coord n) {
  if (n < 0) throw std::out_of_range("gauss_binomial: negative lower entry");
  LaurentInt r(Int(1));
  for (Coord s = 1; s <= n; ++s) {
    r *= LaurentInt::quantum_integer(top - s + 1);
    r = r.divide_exact(LaurentInt::quantum_integer(s));
  }
  return r;
}

LaurentInt laurent_qbinom(Coord m, Coord n) {
  if (n < 0 || n > m) throw std::out_of_range("laurent_qbinom: need 0 <= n <= m");
  return gauss_binomial(m, n);
}

LaurentInt cyclotomic_polynomial(Coord ell) {
  if (ell < 1) throw std::domain_error("cyclotomic_polynomial: ell >= 1 required");
  // Phi_n = (v^n - 1) / prod_{d | n, d < n} Phi_d.
  LaurentInt num = LaurentInt::monomial(Int(1), ell) - LaurentInt(Int(1));
  for (Coord d = 1; d < ell; ++d)
    if (ell % d == 0) num = num.divide_exact(cyclotomic_polynomial(d));
  return num;
}

LaurentInt cyclotomic_reduce(const LaurentInt& x, Coord ell) {
  if (ell < 3 || ell % 2 == 0)
    throw std::domain_error("cyclotomic_reduce: ell must be odd and >= 3");
  if (x.is_zero()) return {};
  const LaurentInt phi = cyclotomic_polynomial(ell);
  const Coord deg = phi.max_exp();  // = euler phi(ell)

  // Reduce a plain polynomial modulo the monic phi.
  auto mod_phi = [&](LaurentInt p) {
    while (!p.is_zero() && p.max_exp() >= deg) {
      Coord sh = p.max_exp() - deg;
      Int lead = p.coeffs().rbegin()->second;
      LaurentInt sub;
      for (const auto& [e, c] : phi.coeffs()) sub += LaurentInt::monomial(lead * c, e + sh);
      p -= sub;
    }
    return p;
  };

  // v is a unit mod phi: phi has constant term 1, so v^-1 = -(phi - 1)/v.
  LaurentInt v_inv;
  for (const auto& [e, c] : phi.coeffs())
    if (e > 0) v_inv += LaurentInt::monomial(-c, e - 1);

  LaurentInt result;
  LaurentInt pow(Int(1));  // v^0
  Coord cur = 0;
  const LaurentInt v = LaurentInt::monomial(Int(1), 1);
  for (const auto& [e, c] : x.coeffs()) {
    while (cur < e) {
      pow = mod_phi(pow * v);
      ++cur;
    }
    while (cur > e) {
      pow = mod_phi(pow * v_inv);
      --cur;
    }
    LaurentInt term;
    for (const auto& [pe, pc] : pow.coeffs()) term += LaurentInt::monomial(c * pc, pe);
    result += term;
  }
  return result;
}

}  // namespace qch
