#pragma once

#include <string>

#include "json.hpp"
#include "qch/bgg.hpp"
#include "qch/formal_char.hpp"
#include "qch/laurent.hpp"
#include "qch/report.hpp"
#include "qch/semiinf.hpp"

namespace qch {

using Json = nlohmann::json;

// Coefficients are serialized as decimal strings so consumers never face
// 64-bit overflow; every array is emitted in its container's canonical
// order, which keeps the byte output stable across runs.

Json json_of(const Weight& w);
Weight weight_from_json(const Json& j);

/// [{"wt": [..], "t": n, "coef": "123"}, ...] ascending in (wt, t).
Json json_of(const FormalChar& c);
FormalChar formal_char_from_json(const Json& j);

/// [{"exp": n, "coef": "123"}, ...] ascending in exp.
Json json_of(const LaurentInt& p);
LaurentInt laurent_from_json(const Json& j);

/// {"numerator": .., "denominator": [{"shift": [..], "t": d, "mult": m}]}
Json json_of(const RationalChar& c);
RationalChar rational_char_from_json(const Json& j);

/// {"layers": [{"degree": d, "cells": [{"word": [..], "char_ref": id}]}],
///  "edges": [{"from": a, "to": b, "sign": s}]}
Json json_of(const BGGComplexShape& cx);

/// Calibration parameters plus the full coefficient diff.
Json json_of(const OracleCalibration& cal);

/// {"suite": name, "timing_ms": t, "cases": [{"identity_id", "parameters",
///  "pass", "witness"?}]}; witness appears exactly on failures.  Check names
/// of the form "id[params]" are split into identity_id and parameters.
Json report_json(const std::string& suite, long long timing_ms,
                 const VerificationReport& report);
/// Inverse of report_json up to the name/parameters split.
VerificationReport report_from_json(const Json& j, std::string* suite = nullptr,
                                    long long* timing_ms = nullptr);

}  // namespace qch
