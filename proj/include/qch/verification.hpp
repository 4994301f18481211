#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "qch/report.hpp"
#include "qch/types.hpp"

namespace qch {

/// Sweep bounds for the verification suites.  The defaults are the shipped
/// configuration; narrowing a list narrows every suite that reads it, and an
/// empty list makes those suites vacuous.
struct VerifyConfig {
  std::vector<std::string> types = {"A1", "A2", "A3", "B2", "B3",
                                    "C2", "C3", "D3", "G2"};
  /// Root-of-unity orders for the rank-one module suites.
  std::vector<Coord> ells = {3, 5, 7};
  /// Orders for the bigraded formula suites, where the sweeps are wider per
  /// order and the shipped configuration stops at 5.
  std::vector<Coord> semiinf_ells = {3, 5};
  Coord kmax = 4;
  /// Dominant-coordinate bound for character sweeps.
  Coord coord_max = 2;
  /// Expansion window for the rank-one formula checks and the oracle.
  Coord truncation = 10;
  /// Hard cap on generated Weyl groups; 0 means the QCH_MAX_WEYL_SIZE
  /// environment variable or the built-in default.  Types over the cap are
  /// reported as explicit skips, not failures.
  std::size_t max_weyl_size = 0;
  /// Directory for golden files; empty means the QCH_GOLDEN_DIR environment
  /// variable or the in-tree default.
  std::string golden_dir;
  /// Rewrite golden files from the current run instead of comparing.
  bool bless = false;
};

/// Suite names in their fixed execution order.
const std::vector<std::string>& verification_suite_names();

/// Runs one named suite.  Throws std::invalid_argument for an unknown name.
VerificationReport run_verification_suite(const std::string& name,
                                          const VerifyConfig& cfg);

/// Runs every suite in order.
std::vector<std::pair<std::string, VerificationReport>> run_verify_all(
    const VerifyConfig& cfg);

}  // namespace qch
