#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "g2maps/quadfield.hpp"

namespace g2maps {

/// Integral binary quadratic form a x^2 + b xy + c y^2.
struct BQF {
  long a = 0, b = 0, c = 0;

  long discriminant() const { return b * b - 4 * a * c; }
  bool primitive() const;
  /// The root (-b + sqrt(disc))/(2a) in the upper half-plane.
  KElem root() const;
  friend auto operator<=>(const BQF&, const BQF&) = default;
};

enum class Domain { None, F1, F2 };

struct CMPoint {
  KElem z;
  Domain tag = Domain::None;
};

/// Reduced primitive forms |b| <= a <= c, b >= 0 if |b| = a or a = c.
std::vector<BQF> reduced_forms(const Disc& disc);
long class_number(const Disc& disc);

/// One point in strict F1 per ideal class of the order of discriminant disc.
std::vector<CMPoint> cm_points_F1(const Disc& disc);

/// Strict F1 = {|z| > 1, -1/2 <= Re z < 1/2} u {|z| = 1, -1/2 <= Re z <= 0}.
bool in_F1(const KElem& z);

struct Reduction {
  CMPoint point;
  /// SL2(Z) (or Gamma(2)) matrix taking the input to point.z.
  Mat2 matrix;
};

/// Gauss reduction into strict F1. Requires im_coeff(z) > 0.
Reduction reduce_to_F1(const KElem& z);

struct Tile {
  std::string label;
  Mat2 map;
};

/// The six tile maps z, -1/z, -1/(z-1), z/(z+1), (z-1)/z, z+1. They are coset
/// representatives of Gamma(2) in SL2(Z) and tile the closure of F2 with
/// copies of the closure of F1.
const std::array<Tile, 6>& gamma2_tile_maps();

/// The six images of tau (which must lie in strict F1), labelled by tile.
std::vector<std::pair<std::string, CMPoint>> gamma2_tiles(const CMPoint& tau);

/// Strict F2 membership: -1/2 <= Re z < 3/2, outside the arcs |z+1| = 1 and
/// |z-2/3| = 1/3 (excluded), on or outside |z-2| = 1 and |z-1/3| = 1/3
/// (included), with the vertex (-1+sqrt(-3))/2 included.
bool in_F2(const KElem& z);

/// Closure of F2 computed from the tile decomposition.
bool in_F2_closure(const KElem& z);

/// Gamma(2) reduction into strict F2; the matrix is congruent to I mod 2.
Reduction reduce_to_F2(const KElem& z);

bool gamma1_equivalent(const KElem& z1, const KElem& z2);
bool gamma2_equivalent(const KElem& z1, const KElem& z2);

/// Elements of SL2(Z)/{+-1} fixing tau, for tau in strict F1.
std::vector<Mat2> stabilizer(const KElem& tau);

}  // namespace g2maps
