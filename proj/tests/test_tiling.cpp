#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <tuple>

#include "grpd/analysis.hpp"
#include "grpd/corpus.hpp"
#include "grpd/tiling.hpp"

using namespace grpd;

namespace {

const Label G = Label::Grout;
const Label T = Label::Tile;
const Label X = Label::Exterior;

PlaneIsometry iso(int eps, int delta, Rat a, Rat b) {
  return {eps, delta, std::move(a), std::move(b)};
}

std::mt19937_64 rng(53);

PlaneIsometry random_gamma() {
  std::uniform_int_distribution<int> sign(0, 1);
  std::uniform_int_distribution<int> shift(-6, 6);
  return {sign(rng) ? 1 : -1, sign(rng) ? 1 : -1, Rat(2 * shift(rng)), Rat(shift(rng))};
}

}  // namespace

TEST_CASE("gamma membership from the closed form") {
  CHECK(gamma_contains(iso(1, 1, 2, 1)));         // lattice translation
  CHECK(gamma_contains(iso(-1, -1, 2, 1)));       // point reflection through (1, 1/2)
  CHECK_FALSE(gamma_contains(iso(1, 1, 1, 0)));   // shifts the vertical lines off X
  CHECK_FALSE(gamma_contains(iso(1, 1, 0, Rat(1, 2))));
  CHECK(gamma_contains(iso(-1, 1, 4, 0)));        // mirror across x = 2
}

TEST_CASE("gamma is closed under composition and inversion") {
  for (int trial = 0; trial < 200; ++trial) {
    const PlaneIsometry g = random_gamma();
    const PlaneIsometry h = random_gamma();
    REQUIRE(gamma_contains(g));
    CHECK(gamma_contains(compose_isometry(g, h)));
    CHECK(gamma_contains(inverse_isometry(g)));
    // Composition and inversion act correctly on points.
    const RatPoint p{Rat(5, 7), Rat(-3, 4)};
    CHECK(apply_isometry(compose_isometry(g, h), p) ==
          apply_isometry(g, apply_isometry(h, p)));
    CHECK(apply_isometry(inverse_isometry(g), apply_isometry(g, p)) == p);
  }
}

TEST_CASE("point classification against the three parts") {
  const TiledRectangle rect{2, 2};
  CHECK(classify_point(rect, {Rat(1, 2), Rat(1)}) == PointClass::Grout);
  CHECK(classify_point(rect, {Rat(1), Rat(1, 2)}) == PointClass::Tile);
  CHECK(classify_point(rect, {Rat(-1), Rat(0)}) == PointClass::Exterior);
  // The whole boundary of B lies on the grout.
  std::uniform_int_distribution<int> coord(0, 8);
  for (int trial = 0; trial < 50; ++trial) {
    const Rat t(coord(rng), 4);
    CHECK(classify_point(rect, {Rat(0), std::min(t, Rat(2))}) == PointClass::Grout);
    CHECK(classify_point(rect, {std::min(t, Rat(4)), Rat(2)}) == PointClass::Grout);
  }
}

TEST_CASE("stencils at the three corner types, frozen by hand") {
  const TiledRectangle rect{2, 2};
  // Interior crossing (2,1): four grout rays, four tile quadrants.
  CHECK(stencil(rect, {Rat(2), Rat(1)}).pattern ==
        LocalPattern{G, T, G, T, G, T, G, T});
  // Boundary T (2,0): E,N,W grout, S exterior; NE,NW tile, SE,SW exterior.
  CHECK(stencil(rect, {Rat(2), Rat(0)}).pattern ==
        LocalPattern{G, T, G, T, G, X, X, X});
  // Corner (0,0): E,N grout; NE tile; everything else exterior.
  CHECK(stencil(rect, {Rat(0), Rat(0)}).pattern ==
        LocalPattern{G, T, G, X, X, X, X, X});
}

TEST_CASE("stencil rejects off-lattice and outside points") {
  const TiledRectangle rect{2, 2};
  CHECK_THROWS_AS(stencil(rect, {Rat(1), Rat(1)}), NotALatticePointError);
  CHECK_THROWS_AS(stencil(rect, {Rat(1, 2), Rat(1)}), NotALatticePointError);
  CHECK_THROWS_AS(stencil(rect, {Rat(-2), Rat(0)}), PointOutsideBError);
}

TEST_CASE("D4 composes, inverts and acts consistently") {
  for (D4 a = 0; a < kD4Order; ++a) {
    CHECK(d4_compose(a, d4_inverse(a)) == kD4Identity);
    CHECK(d4_compose(d4_inverse(a), a) == kD4Identity);
    for (D4 b = 0; b < kD4Order; ++b) {
      const RatPoint p{Rat(3, 2), Rat(-5, 7)};
      CHECK(d4_apply(d4_compose(a, b), p) == d4_apply(a, d4_apply(b, p)));
      for (std::uint8_t dir = 0; dir < 8; ++dir) {
        CHECK(d4_apply_dir(d4_compose(a, b), dir) ==
              d4_apply_dir(a, d4_apply_dir(b, dir)));
      }
    }
  }
  CHECK(identify_group(d4_subgroup_table({0, 1, 2, 3, 4, 5, 6, 7})).name == "D4");
}

TEST_CASE("stencil is equivariant under the rectangle-preserving symmetries") {
  for (long m = 2; m <= 3; ++m) {
    for (long n = 2; n <= 3; ++n) {
      const TiledRectangle rect{m, n};
      // The four elements of Gamma preserving B: identity, both line
      // reflections through the center, and the point reflection.
      const std::vector<std::pair<PlaneIsometry, D4>> symmetries{
          {iso(1, 1, 0, 0), 0},           // r0
          {iso(-1, 1, 2 * m, 0), 6},      // m90
          {iso(1, -1, 0, n), 4},          // m0
          {iso(-1, -1, 2 * m, n), 2},     // r180
      };
      for (const auto& [g, d] : symmetries) {
        REQUIRE(gamma_contains(g));
        for (const RatPoint& p : corner_lattice(rect)) {
          const RatPoint q = apply_isometry(g, p);
          CHECK(point_in_rectangle(rect, q));
          CHECK(stencil(rect, q).pattern == d4_apply_pattern(d, stencil(rect, p).pattern));
        }
      }
    }
  }
}

TEST_CASE("stencil is translation-equivariant at interior crossings") {
  const TiledRectangle rect{3, 3};
  const PlaneIsometry shift = iso(1, 1, 2, 1);
  for (const RatPoint& p : corner_lattice(rect)) {
    const RatPoint q = apply_isometry(shift, p);
    if (!point_in_rectangle(rect, q)) continue;
    const bool p_interior = p.x > 0 && p.x < 2 * rect.m && p.y > 0 && p.y < rect.n;
    const bool q_interior = q.x > 0 && q.x < 2 * rect.m && q.y > 0 && q.y < rect.n;
    if (p_interior && q_interior) {
      CHECK(stencil(rect, q).pattern == stencil(rect, p).pattern);
    }
  }
}

TEST_CASE("the two-point restricted groupoid from the mirror at x = 1") {
  const std::vector<RatPoint> sample{{Rat(1, 2), Rat(1, 4)}, {Rat(3, 2), Rat(1, 4)}};
  const FiniteGroupoid g = restricted_action_groupoid({2, 2}, sample);
  CHECK(g.element_count() == 4);  // two identities plus the mirror pair
  CHECK(orbits(g).block_count() == 1);
  for (Obj x = 0; x < 2; ++x) CHECK(isotropy_group(g, x).cls.name == "trivial");
  CHECK(g.find_element("(1/2,1/4)~(-1,1,2,0)~(3/2,1/4)").has_value());
}

TEST_CASE("restricted isotropy: half-lattice, generic, and mirror points") {
  const auto& g = corpus_groupoid("tiling-restricted-std");
  CHECK(isotropy_group(g, g.object_index("(1,1/2)")).cls.name == "Z2xZ2");
  CHECK(isotropy_group(g, g.object_index("(3,3/2)")).cls.name == "Z2xZ2");
  CHECK(isotropy_group(g, g.object_index("(2,1)")).cls.name == "Z2xZ2");
  CHECK(isotropy_group(g, g.object_index("(1/2,1/4)")).cls.name == "trivial");
  // Points on a single mirror line of the infinite tiling carry a computed
  // Z2 isotropy; the pinned values are the computed ones.
  CHECK(isotropy_group(g, g.object_index("(1,1/4)")).cls.name == "Z2");
  CHECK(isotropy_group(g, g.object_index("(1/2,1/2)")).cls.name == "Z2");
}

TEST_CASE("restricted groupoid arrows satisfy x = gamma.y exactly") {
  const std::vector<RatPoint> sample = standard_restricted_sample();
  const FiniteGroupoid g = restricted_action_groupoid({2, 2}, sample);
  for (Elem e = 0; e < g.element_count(); ++e) {
    // Element names are "x~(eps,delta,a,b)~y"; recompute gamma.y from them.
    const std::string name = g.element_name(e);
    const auto mid_start = name.find('~');
    const auto mid_end = name.rfind('~');
    std::string token = name.substr(mid_start + 2, mid_end - mid_start - 3);
    for (auto& c : token) {
      if (c == ',') c = ' ';
    }
    std::istringstream ss(token);
    std::string es, ds, as, bs;
    ss >> es >> ds >> as >> bs;
    const PlaneIsometry gamma{es == "1" ? 1 : -1, ds == "1" ? 1 : -1,
                              *parse_rational(as), *parse_rational(bs)};
    CHECK(gamma_contains(gamma));
    const RatPoint y = sample[g.beta(e)];
    const RatPoint x = sample[g.alpha(e)];
    CHECK(apply_isometry(gamma, y) == x);
  }
}

TEST_CASE("restricted groupoid rejects points outside the rectangle") {
  CHECK_THROWS_AS(restricted_action_groupoid({2, 2}, {{Rat(5), Rat(0)}}),
                  PointOutsideBError);
}

TEST_CASE("degenerate rectangles are rejected") {
  CHECK_THROWS_AS(local_groupoid_on_corners({0, 2}), Error);
  CHECK_THROWS_AS(local_orbit_census({2, 0}, {}), Error);
}

TEST_CASE("corner groupoid census at m=n=2, frozen") {
  const auto& g = corpus_groupoid("tiling-corners-2x2");
  CHECK(g.object_count() == 9);
  CHECK(g.element_count() == 72);
  const Skeleton s = skeleton(g);
  REQUIRE(s.entries.size() == 3);
  std::multiset<std::pair<std::size_t, std::string>> summary;
  for (const auto& e : s.entries) summary.insert({e.orbit_size, e.isotropy.name});
  CHECK(summary == std::multiset<std::pair<std::size_t, std::string>>{
                       {1, "D4"}, {4, "Z2"}, {4, "Z2"}});
}

TEST_CASE("three orbits with classes D4, Z2, Z2 for every m,n in 2..4") {
  for (long m = 2; m <= 4; ++m) {
    for (long n = 2; n <= 4; ++n) {
      const FiniteGroupoid g = local_groupoid_on_corners({m, n});
      const Skeleton s = skeleton(g);
      REQUIRE(s.entries.size() == 3);
      std::multiset<std::string> classes;
      for (const auto& e : s.entries) classes.insert(e.isotropy.name);
      CHECK(classes == std::multiset<std::string>{"D4", "Z2", "Z2"});
    }
  }
}

TEST_CASE("corner groupoid size matches the orbit-stabilizer count formula") {
  // Elements between x and y number |stabilizer| when the stencils match, so
  // |G| = sum over orbits of |orbit|^2 * |isotropy|: the interior crossings
  // ((m-1)(n-1) points, D4), the boundary T points (2(m-1)+2(n-1), Z2), and
  // the four corners (Z2).
  for (long m = 2; m <= 4; ++m) {
    for (long n = 2; n <= 4; ++n) {
      const std::size_t interior = static_cast<std::size_t>((m - 1) * (n - 1));
      const std::size_t tees = static_cast<std::size_t>(2 * (m - 1) + 2 * (n - 1));
      const std::size_t expected = interior * interior * 8 + tees * tees * 2 + 4 * 4 * 2;
      CHECK(local_groupoid_on_corners({m, n}).element_count() == expected);
    }
  }
}

TEST_CASE("orbit partition of the standard restricted sample, frozen") {
  // Derived by solving a = x1 - eps*y1, b = x2 - delta*y2 over all sample
  // pairs and sign choices: tile centers join, generic quarter-points join
  // through the x=1 and x=3 mirrors plus a glide, mirror points stay alone.
  const auto& g = corpus_groupoid("tiling-restricted-std");
  const OrbitPartition orb = orbits(g);
  std::set<std::set<std::string>> got;
  for (const auto& block : orb.blocks) {
    std::set<std::string> names;
    for (const Obj x : block) names.insert(g.object_name(x));
    got.insert(std::move(names));
  }
  const std::set<std::set<std::string>> expected{
      {"(1,1/2)", "(3,3/2)"},
      {"(2,1)"},
      {"(1/2,1/4)", "(3/2,1/4)", "(5/2,3/4)"},
      {"(1,1/4)"},
      {"(1/2,1/2)"},
  };
  CHECK(got == expected);
}

TEST_CASE("narrow rectangles lose the interior crossing but stay valid") {
  const FiniteGroupoid g = local_groupoid_on_corners({2, 1});
  const Skeleton s = skeleton(g);
  std::multiset<std::string> classes;
  for (const auto& e : s.entries) classes.insert(e.isotropy.name);
  CHECK(classes == std::multiset<std::string>{"Z2", "Z2"});
}

TEST_CASE("census of the standard 12-point sample, frozen") {
  const auto census = local_orbit_census({2, 2}, standard_census_sample());
  REQUIRE(census.size() == 6);
  const std::vector<std::tuple<LocalClass, std::size_t, std::string, bool>> expected{
      {LocalClass::TileInterior, 2, "D4", true},
      {LocalClass::InteriorEdge, 3, "Z2xZ2", false},
      {LocalClass::InteriorCrossing, 1, "D4", false},
      {LocalClass::BoundaryEdge, 2, "Z2", false},
      {LocalClass::BoundaryT, 2, "Z2", false},
      {LocalClass::BoundaryCorner, 2, "Z2", false},
  };
  for (std::size_t i = 0; i < 6; ++i) {
    CHECK(census[i].kind == std::get<0>(expected[i]));
    CHECK(census[i].members.size() == std::get<1>(expected[i]));
    CHECK(census[i].isotropy.name == std::get<2>(expected[i]));
    CHECK(census[i].continuous == std::get<3>(expected[i]));
  }
}

TEST_CASE("census classes are independent of sample order") {
  std::vector<RatPoint> sample = standard_census_sample();
  const auto baseline = local_orbit_census({2, 2}, sample);
  for (int trial = 0; trial < 5; ++trial) {
    std::shuffle(sample.begin(), sample.end(), rng);
    const auto shuffled = local_orbit_census({2, 2}, sample);
    REQUIRE(shuffled.size() == baseline.size());
    for (std::size_t i = 0; i < baseline.size(); ++i) {
      CHECK(shuffled[i].kind == baseline[i].kind);
      CHECK(shuffled[i].members == baseline[i].members);
      CHECK(shuffled[i].isotropy.name == baseline[i].isotropy.name);
    }
  }
}

TEST_CASE("restricted isotropy is independent of sample order") {
  std::vector<RatPoint> sample = standard_restricted_sample();
  std::shuffle(sample.begin(), sample.end(), rng);
  const FiniteGroupoid g = restricted_action_groupoid({2, 2}, sample);
  CHECK(isotropy_group(g, g.object_index("(1,1/2)")).cls.name == "Z2xZ2");
  CHECK(isotropy_group(g, g.object_index("(1/2,1/4)")).cls.name == "trivial");
  CHECK(isotropy_group(g, g.object_index("(1,1/4)")).cls.name == "Z2");
}

TEST_CASE("sample point files parse with comments and reject junk") {
  std::istringstream in("# sample\n1/2 1/4\n2 1\n\n# done\n");
  const auto pts = parse_sample_points(in);
  REQUIRE(pts.size() == 2);
  CHECK(pts[0] == RatPoint{Rat(1, 2), Rat(1, 4)});
  CHECK(pts[1] == RatPoint{Rat(2), Rat(1)});
  std::istringstream bad("1/2\n");
  CHECK_THROWS_AS(parse_sample_points(bad), Error);
}

TEST_CASE("exactly four elements of Gamma preserve the rectangle") {
  // Candidates must fix {0,2m} and {0,n} coordinatewise, leaving one choice
  // of translation per sign pattern; all four land in Gamma.
  for (long m = 2; m <= 3; ++m) {
    for (long n = 1; n <= 3; ++n) {
      int count = 0;
      for (const int eps : {1, -1}) {
        for (const int delta : {1, -1}) {
          const PlaneIsometry g{eps, delta, Rat(eps == 1 ? 0 : 2 * m),
                                Rat(delta == 1 ? 0 : n)};
          if (!gamma_contains(g)) continue;
          const auto corners = corner_lattice(TiledRectangle{m, n});
          const bool preserves = std::all_of(
              corners.begin(), corners.end(), [&](const RatPoint& p) {
                return point_in_rectangle({m, n}, apply_isometry(g, p));
              });
          if (preserves) ++count;
        }
      }
      CHECK(count == 4);
    }
  }
}
