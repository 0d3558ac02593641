#include "grpd/tiling.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace grpd {

namespace {

const Rat kQuarter{1, 4};

// Direction unit vectors, index = angle / 45 degrees.
constexpr int kDirVec[8][2] = {{1, 0},  {1, 1},   {0, 1},  {-1, 1},
                               {-1, 0}, {-1, -1}, {0, -1}, {1, -1}};

// D4 element i: i < 4 is the rotation by 90i degrees, i >= 4 the reflection
// across the axis at 45(i-4) degrees. As a signed shift on direction indices:
// dir -> s*dir + t (mod 8) with s = +1 for rotations, -1 for reflections.
int d4_sign(D4 d) { return d < 4 ? 1 : -1; }
int d4_shift(D4 d) { return d < 4 ? 2 * d : 2 * (d - 4); }

D4 d4_from(int sign, int shift) {
  shift = ((shift % 8) + 8) % 8;
  return static_cast<D4>(sign > 0 ? shift / 2 : 4 + shift / 2);
}

constexpr int kD4Matrix[8][4] = {
    {1, 0, 0, 1},    // r0
    {0, -1, 1, 0},   // r90
    {-1, 0, 0, -1},  // r180
    {0, 1, -1, 0},   // r270
    {1, 0, 0, -1},   // m0
    {0, 1, 1, 0},    // m45
    {-1, 0, 0, 1},   // m90
    {0, -1, -1, 0},  // m135
};

const std::string kD4Names[8] = {"r0", "r90", "r180", "r270",
                                 "m0", "m45", "m90", "m135"};

const std::string kLocalClassNames[6] = {"tile-interior", "interior-edge",
                                         "interior-crossing", "boundary-edge",
                                         "boundary-T", "boundary-corner"};

std::uint64_t triple_key(std::size_t a, std::size_t b, std::size_t c,
                         std::size_t nb, std::size_t nc) {
  return (static_cast<std::uint64_t>(a) * nb + b) * nc + c;
}

}  // namespace

namespace {

void require_valid_rectangle(const TiledRectangle& rect) {
  if (rect.m < 1 || rect.n < 1) {
    throw Error("InvalidRectangle m=" + std::to_string(rect.m) +
                " n=" + std::to_string(rect.n) + " (need m, n >= 1)");
  }
}

}  // namespace

std::string point_name(const RatPoint& p) {
  return "(" + rat_to_string(p.x) + "," + rat_to_string(p.y) + ")";
}

bool point_in_rectangle(const TiledRectangle& rect, const RatPoint& p) {
  return p.x >= 0 && p.x <= 2 * rect.m && p.y >= 0 && p.y <= rect.n;
}

PointClass classify_point(const TiledRectangle& rect, const RatPoint& p) {
  if (!point_in_rectangle(rect, p)) return PointClass::Exterior;
  if (is_integer(p.y) || is_even_integer(p.x)) return PointClass::Grout;
  return PointClass::Tile;
}

RatPoint apply_isometry(const PlaneIsometry& g, const RatPoint& p) {
  return {g.eps * p.x + g.a, g.delta * p.y + g.b};
}

PlaneIsometry compose_isometry(const PlaneIsometry& g, const PlaneIsometry& h) {
  return {g.eps * h.eps, g.delta * h.delta, g.eps * h.a + g.a, g.delta * h.b + g.b};
}

PlaneIsometry inverse_isometry(const PlaneIsometry& g) {
  return {g.eps, g.delta, -g.eps * g.a, -g.delta * g.b};
}

std::string isometry_name(const PlaneIsometry& g) {
  return "(" + std::to_string(g.eps) + "," + std::to_string(g.delta) + "," +
         rat_to_string(g.a) + "," + rat_to_string(g.b) + ")";
}

bool gamma_contains(const PlaneIsometry& g) {
  return is_even_integer(g.a) && is_integer(g.b);
}

const std::string& d4_name(D4 d) { return kD4Names[d]; }

D4 d4_compose(D4 a, D4 b) {
  return d4_from(d4_sign(a) * d4_sign(b), d4_sign(a) * d4_shift(b) + d4_shift(a));
}

D4 d4_inverse(D4 d) {
  return d4_from(d4_sign(d), -d4_sign(d) * d4_shift(d));
}

std::uint8_t d4_apply_dir(D4 d, std::uint8_t dir) {
  const int v = d4_sign(d) * dir + d4_shift(d);
  return static_cast<std::uint8_t>(((v % 8) + 8) % 8);
}

RatPoint d4_apply(D4 d, const RatPoint& p) {
  const auto& m = kD4Matrix[d];
  return {m[0] * p.x + m[1] * p.y, m[2] * p.x + m[3] * p.y};
}

bool d4_is_axis_aligned(D4 d) {
  return kD4Matrix[d][1] == 0;
}

GroupTable d4_subgroup_table(const std::vector<D4>& elements) {
  GroupTable t;
  std::array<std::uint32_t, 8> local;
  local.fill(0xffffffffu);
  for (std::size_t i = 0; i < elements.size(); ++i) {
    t.names.push_back(kD4Names[elements[i]]);
    local[elements[i]] = static_cast<std::uint32_t>(i);
  }
  const std::size_t n = elements.size();
  t.product.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::uint32_t p = local[d4_compose(elements[i], elements[j])];
      if (p == 0xffffffffu) {
        throw std::logic_error("d4_subgroup_table: subset not closed under product");
      }
      t.product[i * n + j] = p;
    }
  }
  return t;
}

LocalPattern d4_apply_pattern(D4 d, const LocalPattern& p) {
  LocalPattern out;
  const D4 inv = d4_inverse(d);
  for (std::uint8_t dir = 0; dir < 8; ++dir) {
    out[dir] = p[d4_apply_dir(inv, dir)];
  }
  return out;
}

Stencil stencil(const TiledRectangle& rect, const RatPoint& p) {
  if (!point_in_rectangle(rect, p)) {
    throw PointOutsideBError("PointOutsideB point=" + point_name(p));
  }
  if (!is_even_integer(p.x) || !is_integer(p.y)) {
    throw NotALatticePointError("NotALatticePoint point=" + point_name(p));
  }
  Stencil s;
  s.point = p;
  for (std::uint8_t dir = 0; dir < 8; ++dir) {
    const RatPoint probe{p.x + kQuarter * kDirVec[dir][0],
                         p.y + kQuarter * kDirVec[dir][1]};
    const PointClass c = classify_point(rect, probe);
    if (dir % 2 == 0) {
      // Axis probes stay on the grout lines, so only Grout/Exterior occur.
      if (c == PointClass::Tile) {
        throw std::logic_error("stencil: axis probe classified as tile");
      }
      s.pattern[dir] = c == PointClass::Grout ? Label::Grout : Label::Exterior;
    } else {
      if (c == PointClass::Grout) {
        throw std::logic_error("stencil: quadrant probe classified as grout");
      }
      s.pattern[dir] = c == PointClass::Tile ? Label::Tile : Label::Exterior;
    }
  }
  return s;
}

// ---------------------------------------------------------------------------
// Restricted transformation groupoid
// ---------------------------------------------------------------------------

FiniteGroupoid restricted_action_groupoid(const TiledRectangle& rect,
                                          const std::vector<RatPoint>& sample) {
  require_valid_rectangle(rect);
  for (const auto& p : sample) {
    if (!point_in_rectangle(rect, p)) {
      throw PointOutsideBError("PointOutsideB point=" + point_name(p));
    }
  }
  const std::size_t np = sample.size();
  FiniteGroupoid::Raw raw;
  for (const auto& p : sample) raw.object_names.push_back(point_name(p));

  // Element (x, g, y) is determined by (x, y) and the sign pair of g; the
  // translation part is solved from x = g.y. Sign pairs are enumerated as
  // (+,+) (+,-) (-,+) (-,-).
  const int signs[4][2] = {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
  std::vector<Elem> at(np * np * 4, kNoElem);
  std::vector<PlaneIsometry> isometry_of;
  std::vector<std::uint8_t> sign_of;
  for (std::size_t xi = 0; xi < np; ++xi) {
    for (std::size_t yi = 0; yi < np; ++yi) {
      for (std::uint8_t s = 0; s < 4; ++s) {
        PlaneIsometry g;
        g.eps = signs[s][0];
        g.delta = signs[s][1];
        g.a = sample[xi].x - g.eps * sample[yi].x;
        g.b = sample[xi].y - g.delta * sample[yi].y;
        if (!gamma_contains(g)) continue;
        at[triple_key(xi, yi, s, np, 4)] =
            static_cast<Elem>(raw.element_names.size());
        raw.element_names.push_back(raw.object_names[xi] + "~" + isometry_name(g) +
                                    "~" + raw.object_names[yi]);
        raw.alpha.push_back(static_cast<Obj>(xi));
        raw.beta.push_back(static_cast<Obj>(yi));
        isometry_of.push_back(g);
        sign_of.push_back(s);
      }
    }
  }
  const std::size_t ne = raw.element_names.size();
  for (Elem e = 0; e < ne; ++e) {
    raw.inverse.push_back(at[triple_key(raw.beta[e], raw.alpha[e], sign_of[e], np, 4)]);
  }
  for (std::size_t xi = 0; xi < np; ++xi) {
    raw.identity_at.push_back(at[triple_key(xi, xi, 0, np, 4)]);
  }
  std::vector<std::vector<Elem>> by_alpha(np);
  for (Elem e = 0; e < ne; ++e) by_alpha[raw.alpha[e]].push_back(e);
  for (Elem e1 = 0; e1 < ne; ++e1) {
    for (const Elem e2 : by_alpha[raw.beta[e1]]) {
      // Signs multiply componentwise, i.e. xor on the packed bits.
      const std::uint8_t s = sign_of[e1] ^ sign_of[e2];
      raw.composites.emplace_back(
          (static_cast<std::uint64_t>(e1) << 32) | e2,
          at[triple_key(raw.alpha[e1], raw.beta[e2], s, np, 4)]);
    }
  }
  return FiniteGroupoid::from_raw(std::move(raw));
}

// ---------------------------------------------------------------------------
// Local groupoid on the corner set
// ---------------------------------------------------------------------------

std::vector<RatPoint> corner_lattice(const TiledRectangle& rect) {
  require_valid_rectangle(rect);
  std::vector<RatPoint> pts;
  for (long x = 0; x <= 2 * rect.m; x += 2) {
    for (long y = 0; y <= rect.n; ++y) {
      pts.push_back({Rat(x), Rat(y)});
    }
  }
  return pts;
}

FiniteGroupoid local_groupoid_on_corners(const TiledRectangle& rect) {
  const std::vector<RatPoint> pts = corner_lattice(rect);
  const std::size_t np = pts.size();
  std::vector<LocalPattern> pattern;
  pattern.reserve(np);
  for (const auto& p : pts) pattern.push_back(stencil(rect, p).pattern);

  FiniteGroupoid::Raw raw;
  for (const auto& p : pts) raw.object_names.push_back(point_name(p));
  std::vector<Elem> at(np * np * kD4Order, kNoElem);
  std::vector<D4> d4_of;
  for (std::size_t xi = 0; xi < np; ++xi) {
    for (std::size_t yi = 0; yi < np; ++yi) {
      for (D4 d = 0; d < kD4Order; ++d) {
        if (d4_apply_pattern(d, pattern[yi]) != pattern[xi]) continue;
        at[triple_key(xi, yi, d, np, kD4Order)] =
            static_cast<Elem>(raw.element_names.size());
        raw.element_names.push_back(raw.object_names[xi] + "~" + kD4Names[d] + "~" +
                                    raw.object_names[yi]);
        raw.alpha.push_back(static_cast<Obj>(xi));
        raw.beta.push_back(static_cast<Obj>(yi));
        d4_of.push_back(d);
      }
    }
  }
  const std::size_t ne = raw.element_names.size();
  for (Elem e = 0; e < ne; ++e) {
    raw.inverse.push_back(
        at[triple_key(raw.beta[e], raw.alpha[e], d4_inverse(d4_of[e]), np, kD4Order)]);
  }
  for (std::size_t xi = 0; xi < np; ++xi) {
    raw.identity_at.push_back(at[triple_key(xi, xi, kD4Identity, np, kD4Order)]);
  }
  std::vector<std::vector<Elem>> by_alpha(np);
  for (Elem e = 0; e < ne; ++e) by_alpha[raw.alpha[e]].push_back(e);
  for (Elem e1 = 0; e1 < ne; ++e1) {
    for (const Elem e2 : by_alpha[raw.beta[e1]]) {
      const D4 d = d4_compose(d4_of[e1], d4_of[e2]);
      raw.composites.emplace_back(
          (static_cast<std::uint64_t>(e1) << 32) | e2,
          at[triple_key(raw.alpha[e1], raw.beta[e2], d, np, kD4Order)]);
    }
  }
  return FiniteGroupoid::from_raw(std::move(raw));
}

// ---------------------------------------------------------------------------
// Local orbit census
// ---------------------------------------------------------------------------

const std::string& local_class_name(LocalClass c) {
  return kLocalClassNames[static_cast<int>(c)];
}

LocalPattern local_pattern_at(const TiledRectangle& rect, const RatPoint& p) {
  if (!point_in_rectangle(rect, p)) {
    throw PointOutsideBError("PointOutsideB point=" + point_name(p));
  }
  LocalPattern out;
  const PointClass c = classify_point(rect, p);
  if (c == PointClass::Tile) {
    out.fill(Label::Tile);
    return out;
  }
  const bool on_h = is_integer(p.y);
  const bool on_v = is_even_integer(p.x);
  if (on_h && on_v) return stencil(rect, p).pattern;
  if (on_h) {
    // Horizontal grout line; 0 < x < 2m is automatic off the vertical lines.
    const Label north = p.y < rect.n ? Label::Tile : Label::Exterior;
    const Label south = p.y > 0 ? Label::Tile : Label::Exterior;
    out = {Label::Grout, north, north, north, Label::Grout, south, south, south};
    return out;
  }
  const Label east = p.x < 2 * rect.m ? Label::Tile : Label::Exterior;
  const Label west = p.x > 0 ? Label::Tile : Label::Exterior;
  out = {east, east, Label::Grout, west, west, west, Label::Grout, east};
  return out;
}

LocalClass classify_local_pattern(const LocalPattern& p) {
  bool any_exterior = false;
  std::vector<std::uint8_t> grout_dirs;
  for (std::uint8_t dir = 0; dir < 8; ++dir) {
    if (p[dir] == Label::Grout) grout_dirs.push_back(dir);
    if (p[dir] == Label::Exterior) any_exterior = true;
  }
  if (grout_dirs.empty() && !any_exterior) return LocalClass::TileInterior;
  switch (grout_dirs.size()) {
    case 4:
      return LocalClass::InteriorCrossing;
    case 3:
      return LocalClass::BoundaryT;
    case 2:
      if ((grout_dirs[1] - grout_dirs[0]) % 4 == 0) {
        return any_exterior ? LocalClass::BoundaryEdge : LocalClass::InteriorEdge;
      }
      return LocalClass::BoundaryCorner;
    default:
      break;
  }
  throw std::logic_error("classify_local_pattern: pattern outside the six classes");
}

std::vector<CensusClass> local_orbit_census(const TiledRectangle& rect,
                                            const std::vector<RatPoint>& sample) {
  require_valid_rectangle(rect);
  std::map<LocalPattern, CensusClass> classes;
  for (const auto& p : sample) {
    const LocalPattern pat = local_pattern_at(rect, p);
    LocalPattern canon = pat;
    for (D4 d = 1; d < kD4Order; ++d) {
      canon = std::min(canon, d4_apply_pattern(d, pat));
    }
    auto [it, inserted] = classes.try_emplace(canon);
    if (inserted) {
      CensusClass& c = it->second;
      c.kind = classify_local_pattern(canon);
      c.continuous = c.kind == LocalClass::TileInterior;
      for (D4 d = 0; d < kD4Order; ++d) {
        if (d4_apply_pattern(d, canon) == canon) c.stabilizer.push_back(d);
      }
      c.isotropy = identify_group(d4_subgroup_table(c.stabilizer));
    }
    it->second.members.push_back(p);
  }
  std::vector<CensusClass> out;
  for (auto& [pat, c] : classes) {
    std::sort(c.members.begin(), c.members.end());
    c.members.erase(std::unique(c.members.begin(), c.members.end()), c.members.end());
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const CensusClass& a, const CensusClass& b) {
    return a.kind < b.kind;
  });
  return out;
}

// ---------------------------------------------------------------------------
// Samples
// ---------------------------------------------------------------------------

std::vector<RatPoint> parse_sample_points(std::istream& in, const std::string& source) {
  std::vector<RatPoint> pts;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ss(line);
    std::string xs, ys;
    if (!(ss >> xs) || xs[0] == '#') continue;
    if (!(ss >> ys)) {
      throw PointOutsideBError("PointOutsideB " + source + ":" + std::to_string(lineno) +
                               ": expected two rationals per line");
    }
    const auto x = parse_rational(xs);
    const auto y = parse_rational(ys);
    if (!x || !y) {
      throw PointOutsideBError("PointOutsideB " + source + ":" + std::to_string(lineno) +
                               ": malformed rational");
    }
    pts.push_back({*x, *y});
  }
  return pts;
}

std::vector<RatPoint> read_sample_points_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw PointOutsideBError("PointOutsideB " + path + ":0: cannot open file");
  }
  return parse_sample_points(in, path);
}

std::vector<RatPoint> standard_census_sample() {
  return {
      {Rat(1, 2), Rat(1, 2)}, {Rat(7, 2), Rat(3, 2)},                          // tile interiors
      {Rat(1, 2), Rat(1)},    {Rat(2), Rat(1, 2)},    {Rat(3), Rat(1)},        // interior edges
      {Rat(2), Rat(1)},                                                        // crossing
      {Rat(1, 2), Rat(0)},    {Rat(4), Rat(1, 2)},                             // boundary edges
      {Rat(2), Rat(0)},       {Rat(0), Rat(1)},                                // boundary T
      {Rat(0), Rat(0)},       {Rat(4), Rat(2)},                                // corners
  };
}

std::vector<RatPoint> standard_restricted_sample() {
  return {
      {Rat(1), Rat(1, 2)},    {Rat(3), Rat(3, 2)},    {Rat(2), Rat(1)},     // half-lattice
      {Rat(1, 2), Rat(1, 4)}, {Rat(3, 2), Rat(1, 4)}, {Rat(5, 2), Rat(3, 4)},  // generic
      {Rat(1), Rat(1, 4)},    {Rat(1, 2), Rat(1, 2)},                       // single mirror
  };
}

}  // namespace grpd
