#pragma once

#include <compare>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qch/types.hpp"

namespace qch {

/// Integral weight in fundamental-weight coordinates, so the pairing with the
/// i-th simple coroot is just coords[i] and dominance is a sign check.
struct Weight {
  std::vector<Coord> coords;

  auto operator<=>(const Weight&) const = default;
};

Weight operator+(const Weight& a, const Weight& b);
Weight operator-(const Weight& a, const Weight& b);
Weight operator-(const Weight& a);
Weight operator*(Coord c, const Weight& a);
bool is_dominant(const Weight& a);
std::string weight_str(const Weight& a);

using IntMatrix = std::vector<std::vector<Coord>>;

struct CartanDatum {
  std::string label;
  int rank = 0;
  // cartan[i][j] = pairing of the i-th simple coroot with the j-th simple
  // root, 0-based.
  IntMatrix cartan;
  // Minimal positive integers with symmetrizer[i] * cartan[i][j] symmetric.
  std::vector<Coord> symmetrizer;
};

struct RootDatum {
  CartanDatum cartan;
  std::vector<Weight> simple_roots;    // j-th Cartan-matrix column
  std::vector<Weight> positive_roots;  // sorted by height, then coordinates
  Weight rho;                          // all fundamental coordinates 1

  // Exact inverse-Cartan data: inv(A) = adjugate / det with det > 0.
  // Cached so root-lattice membership and heights stay in integers.
  std::vector<std::vector<Int>> adjugate;
  Int det;
  // Column sums of the adjugate; height(lam) = height_vec . lam / det.
  std::vector<Int> height_vec;
};

/// Builds the datum for a finite-type label "A1".."A8", "B2".."B8",
/// "C2".."C8", "D3".."D8", "E6".."E8", "F4", "G2".  Positive roots are
/// generated by reflection closure from the simple roots.
/// Throws std::invalid_argument for any other label.
RootDatum build_root_datum(const std::string& label);

/// Pairing of the coroot of the i-th simple root (1-based) with a weight.
/// Throws std::out_of_range for a bad index or mismatched weight length.
Coord pairing(const RootDatum& datum, int coroot_index, const Weight& lam);

/// Coordinates of lam in the simple-root basis, when they are all integers.
std::optional<std::vector<Coord>> root_coords(const RootDatum& datum, const Weight& lam);

/// Height functional vanishing on the simple roots indexed by J (1-based)
/// and equal to 1 on the others.  J empty gives the usual height.
/// Throws std::domain_error when lam is not in the root lattice and
/// std::out_of_range for a bad index in J.
Coord height(const RootDatum& datum, const Weight& lam, const std::set<int>& J = {});

/// det(A) * height(lam), defined for every weight; preserves the height
/// ordering without leaving integer arithmetic.
Int scaled_height(const RootDatum& datum, const Weight& lam);

/// dim of the nilradical opposite to the parabolic of J: the number of
/// positive roots not supported on J (1-based indices).
Coord parabolic_nilradical_dim(const RootDatum& datum, const std::set<int>& J);

/// Matrix of the i-th simple reflection (1-based) on fundamental coordinates.
IntMatrix simple_reflection_matrix(const RootDatum& datum, int i);

Weight apply_matrix(const IntMatrix& m, const Weight& lam);
IntMatrix matrix_product(const IntMatrix& a, const IntMatrix& b);
IntMatrix identity_matrix(int n);

}  // namespace qch
