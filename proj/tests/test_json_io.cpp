#include <string>

#include "doctest.h"
#include "qch/json_io.hpp"
#include "qch/module_chars.hpp"

using namespace qch;

TEST_CASE("formal characters round-trip with big coefficients") {
  // 1/(1-e^-alpha)^40 has binomial coefficients C(n+39, 39), far past 64 bits
  RootDatum datum = build_root_datum("A1");
  RationalChar geom(FormalChar::one(1),
                    {DenomFactor{Weight{{-2}}, 0, 40}});
  FormalChar big = expand_truncated(geom, datum, 40);
  Json j = json_of(big);
  CHECK(formal_char_from_json(j) == big);

  bool saw_big = false;
  for (const auto& term : j) {
    CHECK(term.at("coef").is_string());
    if (int_from_decimal(term.at("coef").get<std::string>()) >
        Int("18446744073709551615"))
      saw_big = true;
  }
  CHECK(saw_big);
}

TEST_CASE("negative t-degrees and weights survive the round trip") {
  RootDatum datum = build_root_datum("A1");
  WeylGroup group = WeylGroup::generate(datum);
  SemiinfCharParams p;
  p.datum = datum;
  p.ell = 3;
  p.lambda = Weight{{0}};
  p.truncation_height = 3;
  FormalChar window = chformula_window(group, p);
  CHECK(formal_char_from_json(json_of(window)) == window);

  RationalChar formula = chformula(group, p);
  RationalChar back = rational_char_from_json(json_of(formula));
  CHECK(back == formula);
  CHECK(rc_equal(datum, back, formula));
}

TEST_CASE("laurent polynomials round-trip") {
  LaurentInt b = gauss_binomial(9, 4);
  CHECK(laurent_from_json(json_of(b)) == b);
  LaurentInt neg = LaurentInt::quantum_integer(-5);
  CHECK(laurent_from_json(json_of(neg)) == neg);
  CHECK(json_of(LaurentInt()).empty());
}

TEST_CASE("complex serialization follows the layers/edges schema") {
  RootDatum datum = build_root_datum("A2");
  BGGComplexShape cx = build_bgg_complex(datum, Weight{{0, 0}});
  Json j = json_of(cx);

  REQUIRE(j.contains("layers"));
  REQUIRE(j.contains("edges"));
  REQUIRE(j.at("layers").size() == 4);
  CHECK(j.at("layers")[0].at("degree") == -3);
  CHECK(j.at("layers")[3].at("degree") == 0);
  CHECK(j.at("layers")[3].at("cells")[0].at("word").empty());
  CHECK(j.at("layers")[3].at("cells")[0].at("char_ref") == "M_e");

  int plus = 0, minus = 0;
  for (const auto& e : j.at("edges")) {
    int s = e.at("sign").get<int>();
    CHECK((s == 1 || s == -1));
    (s == 1 ? plus : minus)++;
    CHECK(e.contains("from"));
    CHECK(e.contains("to"));
  }
  CHECK(plus + minus == 8);
  CHECK(minus > 0);  // anticommuting squares force sign flips somewhere
}

TEST_CASE("calibration record serialization") {
  OracleCalibration cal = calibrate_rank1_oracle(3, 3);
  Json j = json_of(cal);
  CHECK(j.at("converged") == true);
  CHECK(j.at("t_scale") == 2);
  CHECK(j.at("t_offset") == 1);
  CHECK(j.at("weight_scale") == 3);
  CHECK(formal_char_from_json(j.at("residual")) == cal.residual);
}

TEST_CASE("reports round-trip and witnesses appear exactly on failures") {
  VerificationReport report;
  report.add("lowest_weight_string_e", true);
  report.add("simple_decomposition_s[ell=3,k=2]", true);
  report.add("verma_sequence_mu_general[ell=5,k=7]", false,
             "residual has 3 terms");
  Json j = report_json("sl2", 42, report);

  CHECK(j.at("suite") == "sl2");
  CHECK(j.at("timing_ms") == 42);
  REQUIRE(j.at("cases").size() == 3);
  CHECK(j.at("cases")[1].at("identity_id") == "simple_decomposition_s");
  CHECK(j.at("cases")[1].at("parameters") == "ell=3,k=2");
  CHECK_FALSE(j.at("cases")[0].contains("witness"));
  CHECK_FALSE(j.at("cases")[1].contains("witness"));
  CHECK(j.at("cases")[2].at("witness") == "residual has 3 terms");

  std::string suite;
  long long ms = 0;
  VerificationReport back = report_from_json(j, &suite, &ms);
  CHECK(suite == "sl2");
  CHECK(ms == 42);
  REQUIRE(back.checks.size() == 3);
  CHECK(back.checks[1].name == "simple_decomposition_s[ell=3,k=2]");
  CHECK(back.checks[2].passed == false);
  CHECK(back.checks[2].detail == "residual has 3 terms");
  CHECK(report_json("sl2", 42, back) == j);
}

TEST_CASE("serialization is byte-stable") {
  RootDatum datum = build_root_datum("B2");
  WeylGroup group = WeylGroup::generate(datum);
  SemiinfCharParams p;
  p.datum = datum;
  p.ell = 3;
  p.lambda = Weight{{1, 1}};
  std::string once = json_of(chformula(group, p)).dump(2);
  std::string twice = json_of(chformula(group, p)).dump(2);
  CHECK(once == twice);
  CHECK(json_of(build_bgg_complex(group, Weight{{2, 0}})).dump() ==
        json_of(build_bgg_complex(group, Weight{{2, 0}})).dump());
}
