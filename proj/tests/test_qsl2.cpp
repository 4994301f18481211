#include <stdexcept>

#include "doctest.h"
#include "qch/qsl2.hpp"

using qch::Coord;
using qch::Int;
using qch::LaurentInt;
using qch::Sl2VermaVector;

namespace {

LaurentInt qi(Coord n) { return LaurentInt::quantum_integer(n); }

// E acting through repeated single steps, then divided by [a]!.  Independent
// of the closed binomial formula used by act_E_divided.
Sl2VermaVector iterated_E(Coord a, Sl2VermaVector x) {
  for (Coord s = 0; s < a; ++s) x = qch::act_E_divided(1, x);
  Sl2VermaVector r(x.mu());
  LaurentInt fact = LaurentInt::quantum_factorial(a);
  for (const auto& [n, c] : x.entries()) r.add(n, c.divide_exact(fact));
  return r;
}

Sl2VermaVector iterated_F(Coord a, Sl2VermaVector x) {
  for (Coord s = 0; s < a; ++s) x = qch::act_F_divided(1, x);
  Sl2VermaVector r(x.mu());
  LaurentInt fact = LaurentInt::quantum_factorial(a);
  for (const auto& [n, c] : x.entries()) r.add(n, c.divide_exact(fact));
  return r;
}

}  // namespace

TEST_CASE("divided F action") {
  Sl2VermaVector p = Sl2VermaVector::highest_weight_vector(5);
  CHECK(qch::act_F_divided(0, p) == p);
  CHECK(qch::act_F_divided(1, p) == Sl2VermaVector::basis(5, 1));
  // F^(2) F^(1) p = [3 choose 2] F^(3) p, and [3 choose 2] = [3].
  Sl2VermaVector f1 = Sl2VermaVector::basis(5, 1);
  CHECK(qch::act_F_divided(2, f1) == Sl2VermaVector::basis(5, 3, qch::laurent_qbinom(3, 2)));
  CHECK(qch::act_F_divided(2, f1).coeff(3) == qi(3));
  CHECK_THROWS_AS(qch::act_F_divided(-1, p), std::out_of_range);
}

TEST_CASE("divided E action on basis vectors") {
  // E F^(2) p_1 = [0 choose 1] F^(1) p = 0.
  CHECK(qch::act_E_divided(1, Sl2VermaVector::basis(1, 2)).is_zero());
  // E F p_mu = [mu] p_mu.
  for (Coord mu = -3; mu <= 6; ++mu) {
    Sl2VermaVector got = qch::act_E_divided(1, Sl2VermaVector::basis(mu, 1));
    if (mu == 0) {
      CHECK(got.is_zero());
    } else {
      CHECK(got == Sl2VermaVector::basis(mu, 0, qi(mu)));
    }
  }
  // E F^(3) p_1 = [-1 choose 1] F^(2) p = -F^(2) p.
  CHECK(qch::act_E_divided(1, Sl2VermaVector::basis(1, 3)) ==
        Sl2VermaVector::basis(1, 2, LaurentInt(Int(-1))));
  // E^(a) with a > b kills F^(b) p.
  CHECK(qch::act_E_divided(4, Sl2VermaVector::basis(7, 2)).is_zero());
  CHECK_THROWS_AS(qch::act_E_divided(-2, Sl2VermaVector::basis(1, 1)), std::out_of_range);
}

TEST_CASE("closed formulas match iterated single steps") {
  for (Coord mu : {0, 1, 2, 4, 6})
    for (Coord b = 0; b <= 8; ++b)
      for (Coord a = 0; a <= 4; ++a) {
        Sl2VermaVector x = Sl2VermaVector::basis(mu, b);
        CHECK(qch::act_E_divided(a, x) == iterated_E(a, x));
        CHECK(qch::act_F_divided(a, x) == iterated_F(a, x));
      }
}

TEST_CASE("EF - FE acts as the quantum weight scalar") {
  for (Coord mu : {0, 1, 3, 5})
    for (Coord n = 0; n <= 6; ++n) {
      Sl2VermaVector x = Sl2VermaVector::basis(mu, n);
      Sl2VermaVector ef = qch::act_E_divided(1, qch::act_F_divided(1, x));
      Sl2VermaVector fe = qch::act_F_divided(1, qch::act_E_divided(1, x));
      // basis() drops a zero coefficient, so this covers [0] = 0 at mu = 2n.
      Sl2VermaVector expect = Sl2VermaVector::basis(mu, n, qi(mu - 2 * n));
      CHECK(ef + (-fe) == expect);
    }
}

TEST_CASE("actions are linear") {
  Sl2VermaVector x = Sl2VermaVector::basis(4, 2, qi(3));
  x.add(5, LaurentInt::monomial(Int(-2), 1));
  Sl2VermaVector y = Sl2VermaVector::basis(4, 1);
  for (Coord a : {0, 1, 2, 3}) {
    CHECK(qch::act_E_divided(a, x + y) == qch::act_E_divided(a, x) + qch::act_E_divided(a, y));
    CHECK(qch::act_F_divided(a, x + y) == qch::act_F_divided(a, x) + qch::act_F_divided(a, y));
  }
}

TEST_CASE("classical limit of structure constants") {
  // At v = 1 the F-action constant [a+n choose a] counts plain binomials.
  CHECK(qch::act_F_divided(3, Sl2VermaVector::basis(9, 2)).coeff(5).eval_at_one() == 10);
  CHECK(qch::act_E_divided(2, Sl2VermaVector::basis(9, 3)).coeff(1).eval_at_one() == 28);
}

TEST_CASE("cogeneration of the kernel by its top vector") {
  // mu=1, m=3: E^(1) F^(3) p_1 = -F^(2) p_1.
  qch::VerificationReport r13 = qch::verify_cogeneration(1, 3);
  REQUIRE(r13.checks.size() == 2);
  CHECK(r13.all_passed());

  // mu=0, m=1 is the empty E-power with coefficient +1.
  qch::VerificationReport r01 = qch::verify_cogeneration(0, 1);
  CHECK(r01.all_passed());
  CHECK(qch::act_E_divided(0, Sl2VermaVector::basis(0, 1)) == Sl2VermaVector::basis(0, 1));

  for (Coord mu = 0; mu <= 6; ++mu) {
    qch::VerificationReport r = qch::verify_cogeneration(mu, mu + 8);
    CHECK(r.all_passed());
    // The computed sign is (-1)^(m-mu-1) every time.
    for (const auto& c : r.checks) {
      CAPTURE(c.name);
      CHECK(c.detail.find(" matches") != std::string::npos);
    }
  }
  for (Coord ell : {3, 5}) {
    qch::VerificationReport r = qch::verify_cogeneration(2, 9, ell);
    CHECK(r.all_passed());
  }
  CHECK_THROWS_AS(qch::verify_cogeneration(-1, 3), std::invalid_argument);
  CHECK_THROWS_AS(qch::verify_cogeneration(3, 3), std::invalid_argument);
}

TEST_CASE("kernel closure under all divided E powers") {
  for (Coord mu = 0; mu <= 6; ++mu) {
    qch::VerificationReport r = qch::verify_kernel_closure(mu, mu + 8, mu + 8);
    CAPTURE(mu);
    CHECK(r.all_passed());
  }
  CHECK(qch::verify_kernel_closure(1, 2, 1).all_passed());
  CHECK(qch::verify_kernel_closure(3, 4, 0).all_passed());
  for (Coord ell : {3, 7}) CHECK(qch::verify_kernel_closure(4, 12, 12, ell).all_passed());
  CHECK_THROWS_AS(qch::verify_kernel_closure(-2, 3, 3), std::invalid_argument);
}

TEST_CASE("cyclotomic specialization of vectors") {
  Sl2VermaVector x(3);
  x.add(0, qi(3));                  // [3] = 0 at ell = 3
  x.add(1, LaurentInt(Int(1)));     // 1 stays 1
  x.add(2, qi(2));                  // [2] = -1 at ell = 3
  Sl2VermaVector s = qch::specialize_module(3, x);
  CHECK(s.coeff(0).is_zero());
  CHECK(s.coeff(1) == LaurentInt(Int(1)));
  CHECK(s.coeff(2) == LaurentInt(Int(-1)));
  CHECK_THROWS_AS(qch::specialize_module(4, x), std::domain_error);
}
