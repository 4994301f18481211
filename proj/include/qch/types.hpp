#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace qch {

// Exact integer type used for all character coefficients. Weight
// multiplicities grow combinatorially, so coefficients are unbounded.
using Int = mpz_class;

// Lattice coordinates and grading exponents stay small; 64 bits is plenty.
using Coord = long long;

inline std::string to_decimal(const Int& x) { return x.get_str(); }

inline Int int_from_decimal(const std::string& s) { return Int(s); }

}  // namespace qch
