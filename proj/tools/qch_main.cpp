#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qch/json_io.hpp"
#include "qch/module_chars.hpp"
#include "qch/qsl2.hpp"
#include "qch/semiinf.hpp"
#include "qch/verification.hpp"

namespace {

using namespace qch;

std::size_t env_weyl_bound() {
  if (const char* env = std::getenv("QCH_MAX_WEYL_SIZE")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 51840;
}

void emit(const Json& j, bool pretty) {
  std::cout << (pretty ? j.dump(2) : j.dump()) << "\n";
}

bool is_prime(Coord n) {
  if (n < 2) return false;
  for (Coord d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Weight weight_of(const std::vector<long long>& coords) {
  return Weight{std::vector<Coord>(coords.begin(), coords.end())};
}

/// Milliseconds spent in fn; the measured report goes to out.
template <typename Fn>
long long timed(Fn&& fn, VerificationReport& out) {
  auto start = std::chrono::steady_clock::now();
  out = fn();
  auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration_cast<std::chrono::milliseconds>(stop - start)
      .count();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact character arithmetic for root data, Weyl groups, rank-one "
      "quantum module families, and bigraded character formulas"};
  app.require_subcommand(1);
  bool pretty = false;
  app.add_flag("--pretty", pretty, "indent the JSON output");

  // roots
  auto* roots_cmd = app.add_subcommand("roots", "root datum of a finite type");
  std::string roots_type;
  roots_cmd->add_option("--type", roots_type, "type label, e.g. A2")->required();

  // weyl
  auto* weyl_cmd = app.add_subcommand("weyl", "Weyl group summary");
  std::string weyl_type;
  std::size_t weyl_max = 0;
  weyl_cmd->add_option("--type", weyl_type)->required();
  weyl_cmd->add_option("--max-size", weyl_max, "element-count bound");

  // char weyl|quasi-verma|simple-sl2
  auto* char_cmd = app.add_subcommand("char", "module characters");
  char_cmd->require_subcommand(1);
  auto* char_weyl = char_cmd->add_subcommand("weyl", "Weyl module character");
  std::string cw_type;
  std::vector<long long> cw_weight;
  char_weyl->add_option("--type", cw_type)->required();
  char_weyl->add_option("--weight", cw_weight, "dominant highest weight")
      ->required()
      ->delimiter(',');
  auto* char_qv =
      char_cmd->add_subcommand("quasi-verma", "quasi-Verma character at w . mu");
  std::string qv_type;
  std::vector<long long> qv_weight;
  std::vector<int> qv_word;
  char_qv->add_option("--type", qv_type)->required();
  char_qv->add_option("--weight", qv_weight)->required()->delimiter(',');
  char_qv->add_option("--word", qv_word, "reduced word of w, e.g. 1,2,1")
      ->delimiter(',');
  auto* char_sl2 = char_cmd->add_subcommand(
      "simple-sl2", "rank-one simple character at a root of unity");
  Coord sl2_ell = 3, sl2_k = 0;
  char_sl2->add_option("--ell", sl2_ell)->required();
  char_sl2->add_option("--k", sl2_k, "highest weight")->required();

  // bgg build
  auto* bgg_cmd = app.add_subcommand("bgg", "quasi-Verma complex shapes");
  bgg_cmd->require_subcommand(1);
  auto* bgg_build = bgg_cmd->add_subcommand("build", "signed complex shape");
  std::string bgg_type, bgg_out;
  std::vector<long long> bgg_weight;
  bool bgg_cousin = false;
  bgg_build->add_option("--type", bgg_type)->required();
  bgg_build->add_option("--weight", bgg_weight)->required()->delimiter(',');
  bgg_build->add_flag("--cousin", bgg_cousin, "grade by Schubert cells");
  bgg_build->add_option("--json", bgg_out, "write to this file instead of stdout");

  // qsl2 verify
  auto* qsl2_cmd = app.add_subcommand("qsl2", "divided-power module checks");
  qsl2_cmd->require_subcommand(1);
  auto* qsl2_verify = qsl2_cmd->add_subcommand(
      "verify", "cogeneration and kernel-closure identities");
  Coord qmu = 0, qmmax = 0, qell = 0;
  qsl2_verify->add_option("--mu", qmu)->required();
  qsl2_verify->add_option("--mmax", qmmax)->required();
  qsl2_verify->add_option("--ell", qell, "specialize at an odd order >= 3");
  bool qsl2_timings = false;
  qsl2_verify->add_flag("--timings", qsl2_timings,
                        "report measured times (not byte-stable)");

  // semiinf chformula | oracle-rank1
  auto* semiinf_cmd = app.add_subcommand("semiinf", "bigraded character formulas");
  semiinf_cmd->require_subcommand(1);
  auto* si_formula = semiinf_cmd->add_subcommand("chformula", "W-sum formula");
  std::string si_type;
  Coord si_ell = 3, si_trunc = 0;
  std::vector<long long> si_lambda;
  std::vector<int> si_word;
  si_formula->add_option("--type", si_type)->required();
  si_formula->add_option("--ell", si_ell)->required();
  si_formula->add_option("--lambda", si_lambda)->required()->delimiter(',');
  si_formula->add_option("--truncate", si_trunc, "window in multiples of ell")
      ->required();
  si_formula->add_option("--general-w", si_word, "twist word for the general form")
      ->delimiter(',');
  auto* si_oracle = semiinf_cmd->add_subcommand(
      "oracle-rank1", "local-cohomology oracle with calibration");
  Coord or_ell = 3, or_trunc = 0;
  si_oracle->add_option("--ell", or_ell)->required();
  si_oracle->add_option("--truncate", or_trunc)->required();

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "named verification suites");
  std::string verify_suite;
  verify_cmd->add_option("suite", verify_suite, "suite name, 'sl2', or 'all'")
      ->required();
  std::vector<std::string> v_types;
  std::vector<Coord> v_ells;
  Coord v_kmax = -1, v_coord = -1, v_trunc = -1;
  std::string v_golden;
  bool v_bless = false, v_timings = false;
  std::size_t v_weyl = 0;
  verify_cmd->add_option("--type", v_types, "restrict swept types");
  verify_cmd->add_option("--ell", v_ells, "restrict swept orders");
  verify_cmd->add_option("--kmax", v_kmax);
  verify_cmd->add_option("--coord-max", v_coord);
  verify_cmd->add_option("--truncate", v_trunc);
  verify_cmd->add_option("--golden-dir", v_golden);
  verify_cmd->add_flag("--bless", v_bless, "regenerate golden files");
  verify_cmd->add_flag("--timings", v_timings,
                       "report measured times (not byte-stable)");
  verify_cmd->add_option("--max-weyl-size", v_weyl);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success))
      return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    if (*roots_cmd) {
      RootDatum datum = build_root_datum(roots_type);
      Json out;
      out["type"] = datum.cartan.label;
      out["rank"] = datum.cartan.rank;
      out["cartan"] = datum.cartan.cartan;
      out["symmetrizer"] = datum.cartan.symmetrizer;
      out["det"] = to_decimal(datum.det);
      out["rho"] = json_of(datum.rho);
      Json roots = Json::array();
      for (const Weight& alpha : datum.positive_roots)
        roots.push_back(json_of(alpha));
      out["positive_roots"] = std::move(roots);
      out["count"] = datum.positive_roots.size();
      emit(out, pretty);
      return 0;
    }

    if (*weyl_cmd) {
      RootDatum datum = build_root_datum(weyl_type);
      WeylGroup group = WeylGroup::generate(
          datum, weyl_max > 0 ? weyl_max : env_weyl_bound());
      Json out;
      out["type"] = datum.cartan.label;
      out["order"] = group.size();
      const WeylElement& w0 = group.element(group.longest());
      out["longest_length"] = w0.length;
      out["longest_word"] = w0.word;
      std::vector<std::size_t> by_length(w0.length + 1, 0);
      for (const WeylElement& el : group.elements()) ++by_length[el.length];
      out["length_counts"] = by_length;
      out["reflections"] = group.reflections().size();
      emit(out, pretty);
      return 0;
    }

    if (*char_weyl) {
      RootDatum datum = build_root_datum(cw_type);
      WeylGroup group = WeylGroup::generate(datum, env_weyl_bound());
      WeylChar wc = weyl_char(group, weight_of(cw_weight));
      Json out;
      out["type"] = datum.cartan.label;
      out["weight"] = json_of(weight_of(cw_weight));
      out["dimension"] = to_decimal(wc.polynomial.eval_at_one());
      out["polynomial"] = json_of(wc.polynomial);
      out["fraction"] = json_of(wc.fraction);
      emit(out, pretty);
      return 0;
    }
    if (*char_qv) {
      RootDatum datum = build_root_datum(qv_type);
      WeylGroup group = WeylGroup::generate(datum, env_weyl_bound());
      int w = group.element_of_word(qv_word);
      Json out;
      out["type"] = datum.cartan.label;
      out["weight"] = json_of(weight_of(qv_weight));
      out["word"] = group.element(w).word;
      out["character"] =
          json_of(quasi_verma_char(datum, group.element(w), weight_of(qv_weight)));
      emit(out, pretty);
      return 0;
    }
    if (*char_sl2) {
      Json out;
      out["ell"] = sl2_ell;
      out["k"] = sl2_k;
      out["character"] = json_of(simple_sl2_char(sl2_ell, sl2_k));
      emit(out, pretty);
      return 0;
    }

    if (*bgg_build) {
      RootDatum datum = build_root_datum(bgg_type);
      WeylGroup group = WeylGroup::generate(datum, env_weyl_bound());
      Weight mu = weight_of(bgg_weight);
      BGGComplexShape cx =
          bgg_cousin ? cousin_shape(group, mu) : build_bgg_complex(group, mu);
      Json out = json_of(cx);
      out["sign_convention"] =
          "lexicographically least GF(2) solution making every length-2 "
          "Bruhat square anticommute, edges ordered by (shorter, longer) id";
      if (bgg_out.empty()) {
        emit(out, pretty);
      } else {
        std::ofstream file(bgg_out);
        if (!file) throw std::runtime_error("cannot write " + bgg_out);
        file << (pretty ? out.dump(2) : out.dump()) << "\n";
      }
      return 0;
    }

    if (*qsl2_verify) {
      VerificationReport report;
      long long ms = timed(
          [&] {
            VerificationReport r = verify_cogeneration(qmu, qmmax, qell);
            VerificationReport k = verify_kernel_closure(qmu, qmmax, qmmax, qell);
            for (auto& check : k.checks) r.checks.push_back(std::move(check));
            return r;
          },
          report);
      emit(report_json("qsl2", qsl2_timings ? ms : 0, report), pretty);
      return report.all_passed() ? 0 : 1;
    }

    if (*si_formula) {
      RootDatum datum = build_root_datum(si_type);
      WeylGroup group = WeylGroup::generate(datum, env_weyl_bound());
      SemiinfCharParams p;
      p.datum = datum;
      p.ell = si_ell;
      p.lambda = weight_of(si_lambda);
      p.twist_word = si_word;
      p.truncation_height = si_trunc;
      RationalChar formula =
          si_word.empty() ? chformula(group, p) : chformula_general(group, p);
      Json out;
      out["type"] = datum.cartan.label;
      out["ell"] = p.ell;
      out["lambda"] = json_of(p.lambda);
      out["truncation"] = p.truncation_height;
      if (!si_word.empty()) out["twist_word"] = si_word;
      out["formula"] = json_of(formula);
      out["window"] =
          json_of(expand_truncated(formula, datum, p.ell * p.truncation_height));
      if (!is_prime(p.ell))
        out["note"] =
            "ell is not prime; validity at composite orders is conjectural";
      emit(out, pretty);
      return 0;
    }
    if (*si_oracle) {
      OracleCalibration cal = calibrate_rank1_oracle(or_ell, or_trunc);
      Json out;
      out["ell"] = or_ell;
      out["truncation"] = or_trunc;
      out["oracle"] = json_of(cal.oracle);
      out["calibration"] = json_of(cal);
      if (!is_prime(or_ell))
        out["note"] =
            "ell is not prime; validity at composite orders is conjectural";
      emit(out, pretty);
      return 0;
    }

    if (*verify_cmd) {
      VerifyConfig cfg;
      if (!v_types.empty()) cfg.types = v_types;
      if (!v_ells.empty()) {
        cfg.ells = v_ells;
        cfg.semiinf_ells = v_ells;
      }
      if (v_kmax >= 0) cfg.kmax = v_kmax;
      if (v_coord >= 0) cfg.coord_max = v_coord;
      if (v_trunc >= 0) cfg.truncation = v_trunc;
      if (!v_golden.empty()) cfg.golden_dir = v_golden;
      cfg.bless = v_bless;
      if (v_weyl > 0) cfg.max_weyl_size = v_weyl;

      std::vector<std::string> suites;
      if (verify_suite == "all") {
        suites = verification_suite_names();
      } else if (verify_suite == "sl2") {
        suites = {"sl2-sequences", "sl2-filtration"};
      } else {
        const auto& known = verification_suite_names();
        if (std::find(known.begin(), known.end(), verify_suite) == known.end()) {
          std::cerr << "unknown suite '" << verify_suite << "'; expected one of:";
          for (const auto& name : known) std::cerr << " " << name;
          std::cerr << " sl2 all\n";
          return 2;
        }
        suites = {verify_suite};
      }

      Json out = Json::array();
      bool all_ok = true;
      for (const std::string& name : suites) {
        VerificationReport report;
        long long ms =
            timed([&] { return run_verification_suite(name, cfg); }, report);
        all_ok = all_ok && report.all_passed();
        out.push_back(report_json(name, v_timings ? ms : 0, report));
      }
      emit(out, pretty);
      return all_ok ? 0 : 1;
    }
  } catch (const std::exception& e) {
    Json err;
    err["error"] = e.what();
    std::cerr << err.dump() << "\n";
    return 2;
  }
  return 2;
}
