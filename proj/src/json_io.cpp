#include "qch/json_io.hpp"

#include <utility>

namespace qch {

Json json_of(const Weight& w) {
  Json arr = Json::array();
  for (Coord c : w.coords) arr.push_back(c);
  return arr;
}

Weight weight_from_json(const Json& j) {
  Weight w;
  for (const auto& c : j) w.coords.push_back(c.get<Coord>());
  return w;
}

Json json_of(const FormalChar& c) {
  Json arr = Json::array();
  for (const auto& [key, coeff] : c.terms()) {
    Json term;
    term["wt"] = json_of(key.first);
    term["t"] = key.second;
    term["coef"] = to_decimal(coeff);
    arr.push_back(std::move(term));
  }
  return arr;
}

FormalChar formal_char_from_json(const Json& j) {
  FormalChar c;
  for (const auto& term : j)
    c.add_term(weight_from_json(term.at("wt")), term.at("t").get<Coord>(),
               int_from_decimal(term.at("coef").get<std::string>()));
  return c;
}

Json json_of(const LaurentInt& p) {
  Json arr = Json::array();
  for (const auto& [exp, coeff] : p.coeffs()) {
    Json term;
    term["exp"] = exp;
    term["coef"] = to_decimal(coeff);
    arr.push_back(std::move(term));
  }
  return arr;
}

LaurentInt laurent_from_json(const Json& j) {
  LaurentInt p;
  for (const auto& term : j)
    p += LaurentInt::monomial(
        int_from_decimal(term.at("coef").get<std::string>()),
        term.at("exp").get<Coord>());
  return p;
}

Json json_of(const RationalChar& c) {
  Json den = Json::array();
  for (const DenomFactor& f : c.denominator()) {
    Json factor;
    factor["shift"] = json_of(f.shift);
    factor["t"] = f.t_degree;
    factor["mult"] = f.multiplicity;
    den.push_back(std::move(factor));
  }
  Json out;
  out["numerator"] = json_of(c.numerator());
  out["denominator"] = std::move(den);
  return out;
}

RationalChar rational_char_from_json(const Json& j) {
  FormalChar num = formal_char_from_json(j.at("numerator"));
  std::vector<DenomFactor> den;
  for (const auto& factor : j.at("denominator"))
    den.push_back({weight_from_json(factor.at("shift")),
                   factor.at("t").get<Coord>(),
                   factor.at("mult").get<int>()});
  return RationalChar(std::move(num), std::move(den));
}

Json json_of(const BGGComplexShape& cx) {
  Json layers = Json::array();
  for (const BGGLayer& layer : cx.layers) {
    Json cells = Json::array();
    for (const BGGCell& cell : layer.cells) {
      Json c;
      c["word"] = cell.word;
      c["char_ref"] = cell.label;
      cells.push_back(std::move(c));
    }
    Json l;
    l["degree"] = layer.degree;
    l["cells"] = std::move(cells);
    layers.push_back(std::move(l));
  }
  Json edges = Json::array();
  for (const BGGEdge& e : cx.edges) {
    Json edge;
    edge["from"] = e.from;
    edge["to"] = e.to;
    edge["sign"] = e.sign;
    edges.push_back(std::move(edge));
  }
  Json out;
  out["layers"] = std::move(layers);
  out["edges"] = std::move(edges);
  return out;
}

Json json_of(const OracleCalibration& cal) {
  Json out;
  out["converged"] = cal.converged;
  out["weight_sign"] = cal.weight_sign;
  out["weight_scale"] = cal.weight_scale;
  out["t_scale"] = cal.t_scale;
  out["t_offset"] = cal.t_offset;
  out["residual"] = json_of(cal.residual);
  return out;
}

Json report_json(const std::string& suite, long long timing_ms,
                 const VerificationReport& report) {
  Json cases = Json::array();
  for (const CheckResult& c : report.checks) {
    std::string id = c.name, params;
    if (auto open = c.name.find('['); open != std::string::npos) {
      id = c.name.substr(0, open);
      params = c.name.substr(open + 1);
      if (!params.empty() && params.back() == ']') params.pop_back();
    }
    Json entry;
    entry["identity_id"] = id;
    entry["parameters"] = params;
    entry["pass"] = c.passed;
    if (!c.passed) entry["witness"] = c.detail;
    cases.push_back(std::move(entry));
  }
  Json out;
  out["suite"] = suite;
  out["timing_ms"] = timing_ms;
  out["cases"] = std::move(cases);
  return out;
}

VerificationReport report_from_json(const Json& j, std::string* suite,
                                    long long* timing_ms) {
  if (suite) *suite = j.at("suite").get<std::string>();
  if (timing_ms) *timing_ms = j.at("timing_ms").get<long long>();
  VerificationReport report;
  for (const auto& entry : j.at("cases")) {
    std::string name = entry.at("identity_id").get<std::string>();
    std::string params = entry.at("parameters").get<std::string>();
    if (!params.empty()) name += "[" + params + "]";
    report.add(std::move(name), entry.at("pass").get<bool>(),
               entry.contains("witness") ? entry.at("witness").get<std::string>()
                                         : "");
  }
  return report;
}

}  // namespace qch
