#include "grpd/groupoid.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace grpd {

namespace {

constexpr std::size_t kDenseLimit = 4096;  // n*n table up to ~64 MiB

std::uint64_t pair_key(Elem g, Elem h) {
  return (static_cast<std::uint64_t>(g) << 32) | h;
}

std::string pair_name(const std::string& x, const std::string& y) {
  return "(" + x + "," + y + ")";
}

}  // namespace

// ---------------------------------------------------------------------------
// Group tables
// ---------------------------------------------------------------------------

void validate_group_table(const GroupTable& table) {
  const std::size_t n = table.size();
  if (table.product.size() != n * n) {
    throw NotAGroupError("NotAGroup product table size mismatch");
  }
  if (n == 0) throw NotAGroupError("NotAGroup empty table");
  for (std::size_t i = 0; i < n * n; ++i) {
    if (table.product[i] >= n) {
      throw NotAGroupError("NotAGroup product out of range at cell " +
                           std::to_string(i));
    }
  }
  // Identity.
  std::size_t id = n;
  for (std::size_t e = 0; e < n; ++e) {
    bool ok = true;
    for (std::size_t g = 0; g < n; ++g) {
      if (table.at(e, g) != g || table.at(g, e) != g) {
        ok = false;
        break;
      }
    }
    if (ok) {
      id = e;
      break;
    }
  }
  if (id == n) throw NotAGroupError("NotAGroup identity: no two-sided identity");
  // Inverses.
  for (std::size_t g = 0; g < n; ++g) {
    bool found = false;
    for (std::size_t h = 0; h < n; ++h) {
      if (table.at(g, h) == id && table.at(h, g) == id) {
        found = true;
        break;
      }
    }
    if (!found) {
      throw NotAGroupError("NotAGroup inverses: no inverse for " + table.names[g]);
    }
  }
  // Associativity over all triples.
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (table.at(table.at(a, b), c) != table.at(a, table.at(b, c))) {
          throw NotAGroupError("NotAGroup associativity fails at (" +
                               table.names[a] + "," + table.names[b] + "," +
                               table.names[c] + ")");
        }
      }
    }
  }
}

std::uint32_t group_identity(const GroupTable& table) {
  const std::size_t n = table.size();
  for (std::size_t e = 0; e < n; ++e) {
    bool ok = true;
    for (std::size_t g = 0; g < n && ok; ++g) {
      ok = table.at(e, g) == g && table.at(g, e) == g;
    }
    if (ok) return static_cast<std::uint32_t>(e);
  }
  throw NotAGroupError("NotAGroup identity: no two-sided identity");
}

std::uint32_t group_inverse(const GroupTable& table, std::uint32_t g) {
  const std::uint32_t id = group_identity(table);
  for (std::uint32_t h = 0; h < table.size(); ++h) {
    if (table.at(g, h) == id && table.at(h, g) == id) return h;
  }
  throw NotAGroupError("NotAGroup inverses: no inverse for " + table.names[g]);
}

std::uint32_t group_element_order(const GroupTable& table, std::uint32_t g) {
  const std::uint32_t id = group_identity(table);
  std::uint32_t p = g;
  std::uint32_t k = 1;
  while (p != id) {
    p = table.at(p, g);
    ++k;
  }
  return k;
}

bool group_is_abelian(const GroupTable& table) {
  const std::size_t n = table.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (table.at(a, b) != table.at(b, a)) return false;
    }
  }
  return true;
}

GroupTable cyclic_group_table(std::size_t n) {
  GroupTable t;
  for (std::size_t i = 0; i < n; ++i) t.names.push_back("g" + std::to_string(i));
  t.product.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      t.product[i * n + j] = static_cast<std::uint32_t>((i + j) % n);
    }
  }
  return t;
}

GroupTable dihedral_group_table(std::size_t n) {
  // Elements 0..n-1 rotations r^i, n..2n-1 reflections s r^i.
  const std::size_t m = 2 * n;
  GroupTable t;
  for (std::size_t i = 0; i < n; ++i) t.names.push_back("r" + std::to_string(i));
  for (std::size_t i = 0; i < n; ++i) t.names.push_back("s" + std::to_string(i));
  t.product.resize(m * m);
  auto idx = [&](bool refl, std::size_t i) { return (refl ? n : 0) + i; };
  for (std::size_t a = 0; a < m; ++a) {
    const bool ra = a >= n;
    const std::size_t ia = ra ? a - n : a;
    for (std::size_t b = 0; b < m; ++b) {
      const bool rb = b >= n;
      const std::size_t ib = rb ? b - n : b;
      // (s^p r^i)(s^q r^j) = s^(p+q) r^(±i+j) with the sign flipped by q.
      const bool refl = ra != rb;
      const std::size_t i = rb ? (n - ia) % n : ia;
      t.product[a * m + b] = static_cast<std::uint32_t>(idx(refl, (i + ib) % n));
    }
  }
  return t;
}

GroupTable quaternion_group_table() {
  // 0:1 1:-1 2:i 3:-i 4:j 5:-j 6:k 7:-k
  GroupTable t;
  t.names = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  auto neg = [](std::uint32_t v) { return v ^ 1u; };
  auto mul = [&](std::uint32_t a, std::uint32_t b) -> std::uint32_t {
    if (a < 2) return a == 0 ? b : neg(b);
    if (b < 2) return b == 0 ? a : neg(a);
    const std::uint32_t ua = a >> 1, ub = b >> 1;  // 1=i 2=j 3=k
    const bool sa = a & 1, sb = b & 1;
    std::uint32_t unit;
    bool sign;
    if (ua == ub) {
      unit = 0;  // squared unit -> -1
      sign = true;
    } else {
      unit = ua ^ ub;  // i*j=k etc. via xor of {1,2,3}
      sign = !((ub - ua + 3) % 3 == 1);  // cyclic i->j->k positive
    }
    std::uint32_t v = unit == 0 ? 0 : unit << 1;
    bool s = sign != (sa != sb);
    if (unit == 0) return s ? 1 : 0;
    return s ? neg(v) : v;
  };
  t.product.resize(64);
  for (std::uint32_t a = 0; a < 8; ++a) {
    for (std::uint32_t b = 0; b < 8; ++b) t.product[a * 8 + b] = mul(a, b);
  }
  return t;
}

GroupTable direct_product_table(const GroupTable& a, const GroupTable& b) {
  const std::size_t na = a.size(), nb = b.size(), n = na * nb;
  GroupTable t;
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < nb; ++j) {
      t.names.push_back("(" + a.names[i] + "," + b.names[j] + ")");
    }
  }
  t.product.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t pi = a.at(i / nb, j / nb);
      const std::size_t pj = b.at(i % nb, j % nb);
      t.product[i * n + j] = static_cast<std::uint32_t>(pi * nb + pj);
    }
  }
  return t;
}

// ---------------------------------------------------------------------------
// FiniteGroupoid
// ---------------------------------------------------------------------------

std::optional<Obj> FiniteGroupoid::find_object(std::string_view name) const {
  auto it = object_index_.find(std::string(name));
  if (it == object_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<Elem> FiniteGroupoid::find_element(std::string_view name) const {
  auto it = element_index_.find(std::string(name));
  if (it == element_index_.end()) return std::nullopt;
  return it->second;
}

Obj FiniteGroupoid::object_index(std::string_view name) const {
  auto x = find_object(name);
  if (!x) throw ObjectNotFoundError("ObjectNotFound object=" + std::string(name));
  return *x;
}

Elem FiniteGroupoid::element_index(std::string_view name) const {
  auto g = find_element(name);
  if (!g) throw TableError("TableError unknown element '" + std::string(name) + "'");
  return *g;
}

Elem FiniteGroupoid::compose(Elem g, Elem h) const {
  if (dense_) return dense_table_[static_cast<std::size_t>(g) * element_names_.size() + h];
  return sparse_table_.at(pair_key(g, h));
}

std::optional<Elem> FiniteGroupoid::try_compose(Elem g, Elem h) const {
  if (!composable(g, h)) return std::nullopt;
  return compose(g, h);
}

FiniteGroupoid FiniteGroupoid::build(const GroupoidTable& table) {
  Raw raw;
  std::unordered_map<std::string, Obj> objs;
  for (const auto& name : table.objects) {
    if (name.empty()) throw TableError("TableError empty object identifier");
    if (!objs.emplace(name, static_cast<Obj>(raw.object_names.size())).second) {
      throw TableError("TableError duplicate object '" + name + "'");
    }
    raw.object_names.push_back(name);
  }
  std::unordered_map<std::string, Elem> elems;
  for (const auto& row : table.elements) {
    if (row.id.empty()) throw TableError("TableError empty element identifier");
    if (!elems.emplace(row.id, static_cast<Elem>(raw.element_names.size())).second) {
      throw TableError("TableError duplicate element '" + row.id + "'");
    }
    raw.element_names.push_back(row.id);
  }
  auto obj_of = [&](const std::string& name, const std::string& where) -> Obj {
    auto it = objs.find(name);
    if (it == objs.end()) {
      throw TableError("TableError unknown object '" + name + "' in " + where);
    }
    return it->second;
  };
  auto elem_of = [&](const std::string& name, const std::string& where) -> Elem {
    auto it = elems.find(name);
    if (it == elems.end()) {
      throw TableError("TableError unknown element '" + name + "' in " + where);
    }
    return it->second;
  };
  raw.inverse.assign(raw.element_names.size(), kNoElem);
  for (std::size_t i = 0; i < table.elements.size(); ++i) {
    const auto& row = table.elements[i];
    raw.alpha.push_back(obj_of(row.alpha, "element '" + row.id + "'"));
    raw.beta.push_back(obj_of(row.beta, "element '" + row.id + "'"));
    if (row.inverse) {
      raw.inverse[i] = elem_of(*row.inverse, "element '" + row.id + "'");
    }
  }
  raw.identity_at.assign(raw.object_names.size(), kNoElem);
  for (const auto& [x, e] : table.identities) {
    const Obj xi = obj_of(x, "identities");
    if (raw.identity_at[xi] != kNoElem) {
      throw TableError("TableError duplicate identity row for object '" + x + "'");
    }
    raw.identity_at[xi] = elem_of(e, "identities");
  }
  std::unordered_set<std::uint64_t> seen;
  for (const auto& row : table.composites) {
    const Elem g = elem_of(row.g, "compose");
    const Elem h = elem_of(row.h, "compose");
    const Elem gh = elem_of(row.gh, "compose");
    if (!seen.insert(pair_key(g, h)).second) {
      throw TableError("TableError duplicate compose row g=" + row.g + " h=" + row.h);
    }
    raw.composites.emplace_back(pair_key(g, h), gh);
  }
  return from_raw(std::move(raw));
}

FiniteGroupoid FiniteGroupoid::from_raw(Raw raw) {
  FiniteGroupoid g;
  g.object_names_ = std::move(raw.object_names);
  g.element_names_ = std::move(raw.element_names);
  g.alpha_ = std::move(raw.alpha);
  g.beta_ = std::move(raw.beta);
  g.inverse_ = std::move(raw.inverse);
  g.identity_at_ = std::move(raw.identity_at);
  const std::size_t n = g.element_names_.size();
  for (Obj x = 0; x < g.object_names_.size(); ++x) {
    g.object_index_.emplace(g.object_names_[x], x);
  }
  for (Elem e = 0; e < n; ++e) g.element_index_.emplace(g.element_names_[e], e);
  if (g.object_index_.size() != g.object_names_.size()) {
    throw TableError("TableError duplicate object identifiers");
  }
  if (g.element_index_.size() != n) {
    throw TableError("TableError duplicate element identifiers");
  }
  g.alpha_fibres_.resize(g.object_names_.size());
  g.beta_fibres_.resize(g.object_names_.size());
  for (Elem e = 0; e < n; ++e) {
    if (g.alpha_[e] >= g.object_names_.size() || g.beta_[e] >= g.object_names_.size()) {
      throw TableError("TableError element end out of range");
    }
    g.alpha_fibres_[g.alpha_[e]].push_back(e);
    g.beta_fibres_[g.beta_[e]].push_back(e);
  }
  g.dense_ = n <= kDenseLimit;
  if (g.dense_) {
    g.dense_table_.assign(n * n, kNoElem);
    for (const auto& [key, gh] : raw.composites) {
      const Elem a = static_cast<Elem>(key >> 32);
      const Elem b = static_cast<Elem>(key & 0xffffffffu);
      auto& cell = g.dense_table_[static_cast<std::size_t>(a) * n + b];
      if (cell != kNoElem) throw TableError("TableError duplicate compose row");
      cell = gh;
    }
  } else {
    for (const auto& [key, gh] : raw.composites) {
      if (!g.sparse_table_.emplace(key, gh).second) {
        throw TableError("TableError duplicate compose row");
      }
    }
  }
  g.compose_entries_ = raw.composites.size();
  g.validate();
  return g;
}

void FiniteGroupoid::validate() const {
  const std::size_t n = element_names_.size();
  // Identity assignment: total, injective, ends at its own object.
  {
    std::vector<bool> used(n, false);
    for (Obj x = 0; x < object_names_.size(); ++x) {
      const Elem e = identity_at_[x];
      if (e == kNoElem) {
        throw IdentityError("IdentityError object=" + object_names_[x] +
                            " has no identity element");
      }
      if (e >= n) throw TableError("TableError identity element out of range");
      if (used[e]) {
        throw IdentityError("IdentityError element=" + element_names_[e] +
                            " assigned as identity twice");
      }
      used[e] = true;
      if (alpha_[e] != x || beta_[e] != x) {
        throw IdentityError("IdentityError object=" + object_names_[x] +
                            " identity element=" + element_names_[e] +
                            " does not loop at it");
      }
    }
  }
  // Composition domain: defined exactly on beta(g) = alpha(h), with the
  // arrow ends alpha(gh) = alpha(g), beta(gh) = beta(h).
  std::size_t expected = 0;
  for (Obj x = 0; x < object_names_.size(); ++x) {
    expected += beta_fibres_[x].size() * alpha_fibres_[x].size();
  }
  auto check_entry = [&](Elem a, Elem b, Elem ab) {
    if (beta_[a] != alpha_[b]) {
      throw DomainError("DomainError compose declared for non-composable pair g=" +
                        element_names_[a] + " h=" + element_names_[b]);
    }
    if (ab >= n) throw TableError("TableError composite out of range");
    if (alpha_[ab] != alpha_[a] || beta_[ab] != beta_[b]) {
      throw DomainError("DomainError compose has wrong ends g=" + element_names_[a] +
                        " h=" + element_names_[b] + " gh=" + element_names_[ab]);
    }
  };
  if (dense_) {
    for (Elem a = 0; a < n; ++a) {
      const std::size_t row = static_cast<std::size_t>(a) * n;
      for (Elem b = 0; b < n; ++b) {
        if (dense_table_[row + b] != kNoElem) check_entry(a, b, dense_table_[row + b]);
      }
    }
  } else {
    for (const auto& [key, ab] : sparse_table_) {
      check_entry(static_cast<Elem>(key >> 32), static_cast<Elem>(key & 0xffffffffu), ab);
    }
  }
  if (compose_entries_ != expected) {
    // Find the least composable pair missing from the table.
    for (Elem a = 0; a < n; ++a) {
      for (const Elem b : alpha_fibres_[beta_[a]]) {
        const bool present = dense_
            ? dense_table_[static_cast<std::size_t>(a) * n + b] != kNoElem
            : sparse_table_.count(pair_key(a, b)) > 0;
        if (!present) {
          throw DomainError("DomainError compose undefined on composable pair g=" +
                            element_names_[a] + " h=" + element_names_[b]);
        }
      }
    }
  }
  // Identity laws.
  for (Elem e = 0; e < n; ++e) {
    if (compose(identity_at_[alpha_[e]], e) != e || compose(e, identity_at_[beta_[e]]) != e) {
      throw IdentityError("IdentityError identity law fails element=" + element_names_[e]);
    }
  }
  // Inverse laws.
  for (Elem e = 0; e < n; ++e) {
    const Elem inv = inverse_[e];
    if (inv == kNoElem) {
      throw InverseError("InverseError element=" + element_names_[e]);
    }
    if (inv >= n) throw TableError("TableError inverse out of range");
    if (alpha_[inv] != beta_[e] || beta_[inv] != alpha_[e]) {
      throw InverseError("InverseError element=" + element_names_[e] +
                         " inverse has wrong ends");
    }
    if (compose(e, inv) != identity_at_[alpha_[e]] ||
        compose(inv, e) != identity_at_[beta_[e]]) {
      throw InverseError("InverseError element=" + element_names_[e] +
                         " inverse law fails");
    }
  }
  // Associativity over composable chains. (gh)k and g(hk) are both defined
  // whenever the chain is; only the equality needs checking.
  for (Elem a = 0; a < n; ++a) {
    for (const Elem b : alpha_fibres_[beta_[a]]) {
      const Elem ab = compose(a, b);
      for (const Elem c : alpha_fibres_[beta_[b]]) {
        if (compose(ab, c) != compose(a, compose(b, c))) {
          throw AssociativityError("AssociativityError (g*h)*k != g*(h*k) g=" +
                                   element_names_[a] + " h=" + element_names_[b] +
                                   " k=" + element_names_[c]);
        }
      }
    }
  }
}

GroupoidTable FiniteGroupoid::to_table() const {
  GroupoidTable t;
  t.objects = object_names_;
  for (Elem e = 0; e < element_names_.size(); ++e) {
    t.elements.push_back({element_names_[e], object_names_[alpha_[e]],
                          object_names_[beta_[e]], element_names_[inverse_[e]]});
  }
  const std::size_t n = element_names_.size();
  for (Elem a = 0; a < n; ++a) {
    for (const Elem b : alpha_fibres_[beta_[a]]) {
      t.composites.push_back({element_names_[a], element_names_[b],
                              element_names_[compose(a, b)]});
    }
  }
  for (Obj x = 0; x < object_names_.size(); ++x) {
    t.identities.emplace_back(object_names_[x], element_names_[identity_at_[x]]);
  }
  return t;
}

bool structurally_equal(const FiniteGroupoid& a, const FiniteGroupoid& b) {
  if (a.object_names_ != b.object_names_ || a.element_names_ != b.element_names_) {
    return false;
  }
  if (a.alpha_ != b.alpha_ || a.beta_ != b.beta_ || a.inverse_ != b.inverse_ ||
      a.identity_at_ != b.identity_at_) {
    return false;
  }
  const std::size_t n = a.element_names_.size();
  for (Elem g = 0; g < n; ++g) {
    for (const Elem h : a.alpha_fibres_[a.beta_[g]]) {
      if (a.compose(g, h) != b.compose(g, h)) return false;
    }
  }
  return a.compose_entries_ == b.compose_entries_;
}

// ---------------------------------------------------------------------------
// Constructors
// ---------------------------------------------------------------------------

FiniteGroupoid pair_groupoid(const std::vector<std::string>& objects) {
  if (objects.empty()) {
    throw EmptyBaseError("EmptyBase pair groupoid requires a nonempty object set");
  }
  FiniteGroupoid::Raw raw;
  raw.object_names = objects;
  const std::size_t n = objects.size();
  auto elem_at = [&](std::size_t x, std::size_t y) {
    return static_cast<Elem>(x * n + y);
  };
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      raw.element_names.push_back(pair_name(objects[x], objects[y]));
      raw.alpha.push_back(static_cast<Obj>(x));
      raw.beta.push_back(static_cast<Obj>(y));
      raw.inverse.push_back(elem_at(y, x));
    }
  }
  for (std::size_t x = 0; x < n; ++x) raw.identity_at.push_back(elem_at(x, x));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        raw.composites.emplace_back(
            (static_cast<std::uint64_t>(elem_at(x, y)) << 32) | elem_at(y, z),
            elem_at(x, z));
      }
    }
  }
  return FiniteGroupoid::from_raw(std::move(raw));
}

FiniteGroupoid group_as_groupoid(const GroupTable& table, const std::string& object_name) {
  validate_group_table(table);
  FiniteGroupoid::Raw raw;
  raw.object_names = {object_name};
  raw.element_names = table.names;
  const std::size_t n = table.size();
  for (std::size_t g = 0; g < n; ++g) {
    raw.alpha.push_back(0);
    raw.beta.push_back(0);
    raw.inverse.push_back(group_inverse(table, static_cast<std::uint32_t>(g)));
  }
  raw.identity_at = {group_identity(table)};
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      raw.composites.emplace_back((static_cast<std::uint64_t>(a) << 32) | b,
                                  table.at(a, b));
    }
  }
  return FiniteGroupoid::from_raw(std::move(raw));
}

FiniteGroupoid action_groupoid(const GroupTable& group,
                               const std::vector<std::string>& points,
                               const std::vector<std::vector<std::uint32_t>>& action) {
  validate_group_table(group);
  const std::size_t ng = group.size();
  const std::size_t np = points.size();
  if (action.size() != ng) {
    throw NotAnActionError("NotAnAction action table has wrong group dimension");
  }
  for (const auto& row : action) {
    if (row.size() != np) {
      throw NotAnActionError("NotAnAction action table has wrong point dimension");
    }
    for (const auto p : row) {
      if (p >= np) throw NotAnActionError("NotAnAction image point out of range");
    }
  }
  const std::uint32_t id = group_identity(group);
  for (std::size_t p = 0; p < np; ++p) {
    if (action[id][p] != p) {
      throw NotAnActionError("NotAnAction identity acts nontrivially point=" + points[p]);
    }
  }
  for (std::size_t a = 0; a < ng; ++a) {
    for (std::size_t b = 0; b < ng; ++b) {
      for (std::size_t p = 0; p < np; ++p) {
        if (action[a][action[b][p]] != action[group.at(a, b)][p]) {
          throw NotAnActionError("NotAnAction compatibility fails pair=(" +
                                 group.names[a] + "," + group.names[b] +
                                 ") point=" + points[p]);
        }
      }
    }
  }
  FiniteGroupoid::Raw raw;
  raw.object_names = points;
  // Element (x, g, y) with x = g.y, indexed g-major then y.
  auto elem_at = [&](std::size_t g, std::size_t y) {
    return static_cast<Elem>(g * np + y);
  };
  for (std::size_t g = 0; g < ng; ++g) {
    const std::uint32_t ginv = group_inverse(group, static_cast<std::uint32_t>(g));
    for (std::size_t y = 0; y < np; ++y) {
      const std::uint32_t x = action[g][y];
      raw.element_names.push_back(points[x] + "~" + group.names[g] + "~" + points[y]);
      raw.alpha.push_back(x);
      raw.beta.push_back(static_cast<Obj>(y));
      raw.inverse.push_back(elem_at(ginv, x));
    }
  }
  for (std::size_t y = 0; y < np; ++y) raw.identity_at.push_back(elem_at(id, y));
  // (x,g,y)(y,h,z) = (x, gh, z).
  for (std::size_t g = 0; g < ng; ++g) {
    for (std::size_t h = 0; h < ng; ++h) {
      const std::uint32_t gh = group.at(g, h);
      for (std::size_t z = 0; z < np; ++z) {
        const std::uint32_t y = action[h][z];
        raw.composites.emplace_back(
            (static_cast<std::uint64_t>(elem_at(g, y)) << 32) | elem_at(h, z),
            elem_at(gh, z));
      }
    }
  }
  return FiniteGroupoid::from_raw(std::move(raw));
}

FiniteGroupoid restrict_to(const FiniteGroupoid& g, const std::vector<Obj>& objects) {
  std::vector<bool> keep(g.object_count(), false);
  for (const Obj x : objects) {
    if (x >= g.object_count()) {
      throw ObjectNotFoundError("ObjectNotFound object index out of range");
    }
    keep[x] = true;
  }
  FiniteGroupoid::Raw raw;
  std::vector<Obj> obj_map(g.object_count(), kNoObj);
  for (Obj x = 0; x < g.object_count(); ++x) {
    if (keep[x]) {
      obj_map[x] = static_cast<Obj>(raw.object_names.size());
      raw.object_names.push_back(g.object_name(x));
    }
  }
  std::vector<Elem> elem_map(g.element_count(), kNoElem);
  for (Elem e = 0; e < g.element_count(); ++e) {
    if (keep[g.alpha(e)] && keep[g.beta(e)]) {
      elem_map[e] = static_cast<Elem>(raw.element_names.size());
      raw.element_names.push_back(g.element_name(e));
      raw.alpha.push_back(obj_map[g.alpha(e)]);
      raw.beta.push_back(obj_map[g.beta(e)]);
    }
  }
  // Inverses stay inside the kept set: both ends of g^-1 are ends of g.
  for (Elem e = 0; e < g.element_count(); ++e) {
    if (elem_map[e] != kNoElem) raw.inverse.push_back(elem_map[g.inverse(e)]);
  }
  for (Obj x = 0; x < g.object_count(); ++x) {
    if (keep[x]) raw.identity_at.push_back(elem_map[g.identity_at(x)]);
  }
  for (Elem a = 0; a < g.element_count(); ++a) {
    if (elem_map[a] == kNoElem) continue;
    for (const Elem b : g.alpha_fibre(g.beta(a))) {
      if (elem_map[b] == kNoElem) continue;
      raw.composites.emplace_back(
          (static_cast<std::uint64_t>(elem_map[a]) << 32) | elem_map[b],
          elem_map[g.compose(a, b)]);
    }
  }
  return FiniteGroupoid::from_raw(std::move(raw));
}

FiniteGroupoid restrict_to(const FiniteGroupoid& g,
                           const std::vector<std::string>& object_names) {
  std::vector<Obj> objs;
  objs.reserve(object_names.size());
  for (const auto& name : object_names) objs.push_back(g.object_index(name));
  return restrict_to(g, objs);
}

FiniteGroupoid equivalence_relation_groupoid(
    const std::vector<std::string>& objects,
    const std::vector<std::vector<std::string>>& blocks) {
  std::unordered_map<std::string, Obj> index;
  for (const auto& name : objects) {
    if (!index.emplace(name, static_cast<Obj>(index.size())).second) {
      throw NotAPartitionError("NotAPartition duplicate object '" + name + "'");
    }
  }
  std::vector<std::uint32_t> block_of(objects.size(), kNoObj);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw NotAPartitionError("NotAPartition empty block");
    for (const auto& name : blocks[b]) {
      auto it = index.find(name);
      if (it == index.end()) {
        throw NotAPartitionError("NotAPartition block member '" + name +
                                 "' is not an object");
      }
      if (block_of[it->second] != kNoObj) {
        throw NotAPartitionError("NotAPartition blocks overlap at '" + name + "'");
      }
      block_of[it->second] = static_cast<std::uint32_t>(b);
    }
  }
  for (Obj x = 0; x < objects.size(); ++x) {
    if (block_of[x] == kNoObj) {
      throw NotAPartitionError("NotAPartition object '" + objects[x] +
                               "' not covered by any block");
    }
  }
  FiniteGroupoid::Raw raw;
  raw.object_names = objects;
  // Elements are the in-block ordered pairs, (x, y) ascending.
  std::vector<std::vector<Elem>> at(objects.size(),
                                    std::vector<Elem>(objects.size(), kNoElem));
  for (Obj x = 0; x < objects.size(); ++x) {
    for (Obj y = 0; y < objects.size(); ++y) {
      if (block_of[x] != block_of[y]) continue;
      at[x][y] = static_cast<Elem>(raw.element_names.size());
      raw.element_names.push_back(pair_name(objects[x], objects[y]));
      raw.alpha.push_back(x);
      raw.beta.push_back(y);
    }
  }
  for (Elem e = 0; e < raw.element_names.size(); ++e) {
    raw.inverse.push_back(at[raw.beta[e]][raw.alpha[e]]);
  }
  for (Obj x = 0; x < objects.size(); ++x) raw.identity_at.push_back(at[x][x]);
  for (Obj x = 0; x < objects.size(); ++x) {
    for (Obj y = 0; y < objects.size(); ++y) {
      if (at[x][y] == kNoElem) continue;
      for (Obj z = 0; z < objects.size(); ++z) {
        if (at[y][z] == kNoElem) continue;
        raw.composites.emplace_back(
            (static_cast<std::uint64_t>(at[x][y]) << 32) | at[y][z], at[x][z]);
      }
    }
  }
  return FiniteGroupoid::from_raw(std::move(raw));
}

FiniteGroupoid disjoint_union(std::span<const FiniteGroupoid> parts) {
  FiniteGroupoid::Raw raw;
  std::vector<Obj> obj_base;
  std::vector<Elem> elem_base;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const auto& p = parts[i];
    const std::string tag = std::to_string(i) + ":";
    obj_base.push_back(static_cast<Obj>(raw.object_names.size()));
    elem_base.push_back(static_cast<Elem>(raw.element_names.size()));
    for (Obj x = 0; x < p.object_count(); ++x) {
      raw.object_names.push_back(tag + p.object_name(x));
    }
    for (Elem e = 0; e < p.element_count(); ++e) {
      raw.element_names.push_back(tag + p.element_name(e));
      raw.alpha.push_back(obj_base[i] + p.alpha(e));
      raw.beta.push_back(obj_base[i] + p.beta(e));
      raw.inverse.push_back(elem_base[i] + p.inverse(e));
    }
    for (Obj x = 0; x < p.object_count(); ++x) {
      raw.identity_at.push_back(elem_base[i] + p.identity_at(x));
    }
    for (Elem a = 0; a < p.element_count(); ++a) {
      for (const Elem b : p.alpha_fibre(p.beta(a))) {
        raw.composites.emplace_back(
            (static_cast<std::uint64_t>(elem_base[i] + a) << 32) | (elem_base[i] + b),
            elem_base[i] + p.compose(a, b));
      }
    }
  }
  return FiniteGroupoid::from_raw(std::move(raw));
}

FiniteGroupoid disjoint_union(const FiniteGroupoid& a, const FiniteGroupoid& b) {
  const FiniteGroupoid parts[] = {a, b};
  return disjoint_union(std::span<const FiniteGroupoid>(parts, 2));
}

bool is_wide_subgroupoid(const FiniteGroupoid& g, std::span<const Elem> subset) {
  std::vector<bool> in(g.element_count(), false);
  for (const Elem e : subset) {
    if (e >= g.element_count()) return false;
    in[e] = true;
  }
  for (Obj x = 0; x < g.object_count(); ++x) {
    if (!in[g.identity_at(x)]) return false;
  }
  for (Elem a = 0; a < g.element_count(); ++a) {
    if (!in[a]) continue;
    if (!in[g.inverse(a)]) return false;
    for (const Elem b : g.alpha_fibre(g.beta(a))) {
      if (in[b] && !in[g.compose(a, b)]) return false;
    }
  }
  return true;
}

}  // namespace grpd
