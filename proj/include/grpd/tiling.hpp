#ifndef GRPD_TILING_HPP
#define GRPD_TILING_HPP

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "grpd/analysis.hpp"
#include "grpd/groupoid.hpp"
#include "grpd/rational.hpp"

namespace grpd {

class PointOutsideBError : public Error {
 public:
  using Error::Error;
};

class NotALatticePointError : public Error {
 public:
  using Error::Error;
};

struct RatPoint {
  Rat x;
  Rat y;

  friend bool operator==(const RatPoint& a, const RatPoint& b) {
    return a.x == b.x && a.y == b.y;
  }
  friend bool operator<(const RatPoint& a, const RatPoint& b) {
    return a.x != b.x ? a.x < b.x : a.y < b.y;
  }
};

std::string point_name(const RatPoint& p);

// ---------------------------------------------------------------------------
// The tiled rectangle B = [0, 2m] x [0, n] inside the grout set
// X = (R x Z) u (2Z x R). P1 = B n X (grout), P2 = B \ P1 (tile interiors;
// the whole boundary of B lies in X), P3 = complement of B.
// ---------------------------------------------------------------------------

struct TiledRectangle {
  long m = 1;
  long n = 1;
};

enum class PointClass { Grout, Tile, Exterior };

PointClass classify_point(const TiledRectangle& rect, const RatPoint& p);
bool point_in_rectangle(const TiledRectangle& rect, const RatPoint& p);

// ---------------------------------------------------------------------------
// The symmetry group of the infinite tiling: (x,y) -> (ex + a, dy + b) with
// e, d in {+1,-1}. Membership in Gamma is a in 2Z and b in Z, which is exactly
// the subgroup preserving both line families; it is generated by the lattice
// translations together with the point and line reflections through Z x (1/2)Z.
// ---------------------------------------------------------------------------

struct PlaneIsometry {
  int eps = 1;    // +1 or -1
  int delta = 1;  // +1 or -1
  Rat a;
  Rat b;
};

RatPoint apply_isometry(const PlaneIsometry& g, const RatPoint& p);
PlaneIsometry compose_isometry(const PlaneIsometry& g, const PlaneIsometry& h);  // g after h
PlaneIsometry inverse_isometry(const PlaneIsometry& g);
std::string isometry_name(const PlaneIsometry& g);

bool gamma_contains(const PlaneIsometry& g);

// ---------------------------------------------------------------------------
// D4, the point symmetries of the square lattice germ. Directions are indexed
// by multiples of 45 degrees: 0=E 1=NE 2=N 3=NW 4=W 5=SW 6=S 7=SE. Indices
// 0..3 are the rotations r0 r90 r180 r270, 4..7 the reflections m0 m45 m90
// m135 (axis angle in degrees).
// ---------------------------------------------------------------------------

using D4 = std::uint8_t;
inline constexpr D4 kD4Identity = 0;
inline constexpr std::size_t kD4Order = 8;

const std::string& d4_name(D4 d);
D4 d4_compose(D4 a, D4 b);  // a after b
D4 d4_inverse(D4 d);
std::uint8_t d4_apply_dir(D4 d, std::uint8_t dir);
RatPoint d4_apply(D4 d, const RatPoint& p);
// The four elements with diagonal linear part, as plane isometries fixing the
// origin; the remaining four involve the xy swap and lie outside the
// (eps, delta) family.
bool d4_is_axis_aligned(D4 d);

// Multiplication table of a subset of D4 that is closed under the product.
GroupTable d4_subgroup_table(const std::vector<D4>& elements);

// ---------------------------------------------------------------------------
// Stencil: the radius-1/4 germ of the tiling at a lattice point, probed at
// the four axis rays and four quadrant offsets. Rays carry Grout/Exterior,
// quadrants Tile/Exterior. D4 acts by permuting directions.
// ---------------------------------------------------------------------------

enum class Label : std::uint8_t { Grout, Tile, Exterior };

using LocalPattern = std::array<Label, 8>;  // indexed by direction

LocalPattern d4_apply_pattern(D4 d, const LocalPattern& p);

struct Stencil {
  RatPoint point;
  LocalPattern pattern;

  bool ray_is_grout(std::uint8_t axis_dir) const {
    return pattern[axis_dir] == Label::Grout;
  }
  Label quadrant(std::uint8_t diag_dir) const { return pattern[diag_dir]; }
};

// Throws NotALatticePointError unless p is in the corner lattice (2Z x Z),
// PointOutsideBError unless p lies in B.
Stencil stencil(const TiledRectangle& rect, const RatPoint& p);

// ---------------------------------------------------------------------------
// Groupoids of the tiled rectangle.
// ---------------------------------------------------------------------------

// Transformation groupoid of Gamma restricted to a finite sample of B:
// triples (x, g, y) with x = g.y, named "x~(e,d,a,b)~y". For each ordered
// sample pair and each sign choice the translation part is solved exactly.
FiniteGroupoid restricted_action_groupoid(const TiledRectangle& rect,
                                          const std::vector<RatPoint>& sample);

// Local symmetry groupoid on the corner set L = (2Z x Z) n B: elements
// (x, d, y) with d in D4 matching the stencil of y to the stencil of x,
// composed by (x,d,y)(y,d',z) = (x, dd', z).
FiniteGroupoid local_groupoid_on_corners(const TiledRectangle& rect);
std::vector<RatPoint> corner_lattice(const TiledRectangle& rect);

// ---------------------------------------------------------------------------
// Local orbit census over arbitrary sample points of B. Descriptors extend
// the stencil to edge and tile points; points are grouped by D4 equivalence
// of descriptors. Tile interiors carry the symbolic O(2) tag.
// ---------------------------------------------------------------------------

enum class LocalClass {
  TileInterior,
  InteriorEdge,
  InteriorCrossing,
  BoundaryEdge,
  BoundaryT,
  BoundaryCorner,
};

const std::string& local_class_name(LocalClass c);

LocalPattern local_pattern_at(const TiledRectangle& rect, const RatPoint& p);
LocalClass classify_local_pattern(const LocalPattern& p);

struct CensusClass {
  LocalClass kind;
  std::vector<RatPoint> members;    // sorted by (x, y)
  std::vector<D4> stabilizer;       // of the canonical pattern
  GroupClassification isotropy;     // class of the stabilizer subgroup
  bool continuous = false;          // O(2) tag for tile interiors
};

// Classes ordered TileInterior..BoundaryCorner; absent classes are omitted.
std::vector<CensusClass> local_orbit_census(const TiledRectangle& rect,
                                            const std::vector<RatPoint>& sample);

// ---------------------------------------------------------------------------
// Sample-point files: one "x y" pair of rationals per line, '#' comments.
// ---------------------------------------------------------------------------

std::vector<RatPoint> parse_sample_points(std::istream& in,
                                          const std::string& source = "<input>");
std::vector<RatPoint> read_sample_points_file(const std::string& path);

// Worked samples for the m = n = 2 rectangle: twelve census points covering
// all six local classes, and eight restricted-groupoid points covering the
// half-lattice, single-mirror, and generic isotropy cases.
std::vector<RatPoint> standard_census_sample();
std::vector<RatPoint> standard_restricted_sample();

}  // namespace grpd

#endif  // GRPD_TILING_HPP
