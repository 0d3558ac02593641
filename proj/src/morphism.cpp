#include "grpd/morphism.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <stdexcept>

namespace grpd {

namespace {

void require_same_shape(const GroupoidMorphism& a, const GroupoidMorphism& b) {
  if (a.source != b.source || a.target != b.target) {
    throw ShapeMismatchError("ShapeMismatch morphisms do not share source and target");
  }
}

// Candidate arrows for h(x): alpha' = from, beta' = to.
std::vector<Elem> hom_arrows(const FiniteGroupoid& g, Obj from, Obj to) {
  std::vector<Elem> out;
  for (const Elem e : g.alpha_fibre(from)) {
    if (g.beta(e) == to) out.push_back(e);
  }
  return out;
}

}  // namespace

bool operator==(const GroupoidMorphism& a, const GroupoidMorphism& b) {
  return a.source == b.source && a.target == b.target && a.elem_map == b.elem_map &&
         a.obj_map == b.obj_map;
}

GroupoidMorphism validate_morphism(const FiniteGroupoid& source,
                                   const FiniteGroupoid& target,
                                   std::vector<Elem> elem_map,
                                   std::vector<Obj> obj_map) {
  if (elem_map.size() != source.element_count() || obj_map.size() != source.object_count()) {
    throw NotAMorphismError("NotAMorphism map sizes do not match the source");
  }
  for (Obj x = 0; x < source.object_count(); ++x) {
    if (obj_map[x] >= target.object_count()) {
      throw NotAMorphismError("NotAMorphism object image out of range at " +
                              source.object_name(x));
    }
  }
  for (Elem e = 0; e < source.element_count(); ++e) {
    if (elem_map[e] >= target.element_count()) {
      throw NotAMorphismError("NotAMorphism element image out of range at " +
                              source.element_name(e));
    }
    if (target.alpha(elem_map[e]) != obj_map[source.alpha(e)]) {
      throw NotAMorphismError("NotAMorphism alpha not intertwined element=" +
                              source.element_name(e));
    }
    if (target.beta(elem_map[e]) != obj_map[source.beta(e)]) {
      throw NotAMorphismError("NotAMorphism beta not intertwined element=" +
                              source.element_name(e));
    }
  }
  for (Obj x = 0; x < source.object_count(); ++x) {
    if (elem_map[source.identity_at(x)] != target.identity_at(obj_map[x])) {
      throw NotAMorphismError("NotAMorphism identity not preserved object=" +
                              source.object_name(x));
    }
  }
  for (Elem a = 0; a < source.element_count(); ++a) {
    for (const Elem b : source.alpha_fibre(source.beta(a))) {
      if (target.compose(elem_map[a], elem_map[b]) != elem_map[source.compose(a, b)]) {
        throw NotAMorphismError("NotAMorphism composition not preserved g=" +
                                source.element_name(a) + " h=" + source.element_name(b));
      }
    }
  }
  GroupoidMorphism m;
  m.source = &source;
  m.target = &target;
  m.elem_map = std::move(elem_map);
  m.obj_map = std::move(obj_map);
  return m;
}

GroupoidMorphism identity_morphism(const FiniteGroupoid& g) {
  GroupoidMorphism m;
  m.source = &g;
  m.target = &g;
  m.elem_map.resize(g.element_count());
  m.obj_map.resize(g.object_count());
  for (Elem e = 0; e < g.element_count(); ++e) m.elem_map[e] = e;
  for (Obj x = 0; x < g.object_count(); ++x) m.obj_map[x] = x;
  return m;
}

GroupoidMorphism compose_morphisms(const GroupoidMorphism& first,
                                   const GroupoidMorphism& second) {
  if (first.target != second.source) {
    throw ShapeMismatchError("ShapeMismatch target of first is not source of second");
  }
  std::vector<Elem> elem_map(first.elem_map.size());
  std::vector<Obj> obj_map(first.obj_map.size());
  for (std::size_t e = 0; e < elem_map.size(); ++e) {
    elem_map[e] = second.elem_map[first.elem_map[e]];
  }
  for (std::size_t x = 0; x < obj_map.size(); ++x) {
    obj_map[x] = second.obj_map[first.obj_map[x]];
  }
  return validate_morphism(*first.source, *second.target, std::move(elem_map),
                           std::move(obj_map));
}

CanonicalPairMorphism canonical_pair_morphism(const FiniteGroupoid& g) {
  const std::size_t n = g.object_count();
  if (n == 0) {
    auto target = std::make_unique<FiniteGroupoid>(
        FiniteGroupoid::from_raw(FiniteGroupoid::Raw{}));
    GroupoidMorphism m;
    m.source = &g;
    m.target = target.get();
    return {std::move(target), std::move(m),
            FiniteGroupoid::from_raw(FiniteGroupoid::Raw{}), {}};
  }
  auto pair_target = std::make_unique<FiniteGroupoid>(pair_groupoid(g.object_names()));
  // pair_groupoid lists elements x-major, so (x,y) sits at x*n + y.
  std::vector<Elem> kernel;
  std::vector<Elem> elem_map(g.element_count());
  std::vector<bool> realized(n * n, false);
  for (Elem e = 0; e < g.element_count(); ++e) {
    const std::size_t cell = static_cast<std::size_t>(g.alpha(e)) * n + g.beta(e);
    elem_map[e] = static_cast<Elem>(cell);
    realized[cell] = true;
    if (g.alpha(e) == g.beta(e)) kernel.push_back(e);
  }
  std::vector<Obj> obj_map(n);
  for (Obj x = 0; x < n; ++x) obj_map[x] = x;
  GroupoidMorphism morphism =
      validate_morphism(g, *pair_target, std::move(elem_map), std::move(obj_map));
  // The image is the set of realized pairs; groupoid validation of the
  // direct construction doubles as a check that it is an equivalence relation.
  FiniteGroupoid::Raw raw;
  raw.object_names = g.object_names();
  std::vector<Elem> at(n * n, kNoElem);
  for (Obj x = 0; x < n; ++x) {
    for (Obj y = 0; y < n; ++y) {
      const std::size_t cell = static_cast<std::size_t>(x) * n + y;
      if (!realized[cell]) continue;
      at[cell] = static_cast<Elem>(raw.element_names.size());
      raw.element_names.push_back("(" + g.object_name(x) + "," + g.object_name(y) + ")");
      raw.alpha.push_back(x);
      raw.beta.push_back(y);
    }
  }
  for (Elem e = 0; e < raw.element_names.size(); ++e) {
    raw.inverse.push_back(at[static_cast<std::size_t>(raw.beta[e]) * n + raw.alpha[e]]);
  }
  for (Obj x = 0; x < n; ++x) {
    raw.identity_at.push_back(at[static_cast<std::size_t>(x) * n + x]);
  }
  for (Obj x = 0; x < n; ++x) {
    for (Obj y = 0; y < n; ++y) {
      if (at[static_cast<std::size_t>(x) * n + y] == kNoElem) continue;
      for (Obj z = 0; z < n; ++z) {
        if (at[static_cast<std::size_t>(y) * n + z] == kNoElem) continue;
        raw.composites.emplace_back(
            (static_cast<std::uint64_t>(at[static_cast<std::size_t>(x) * n + y]) << 32) |
                at[static_cast<std::size_t>(y) * n + z],
            at[static_cast<std::size_t>(x) * n + z]);
      }
    }
  }
  return {std::move(pair_target), std::move(morphism),
          FiniteGroupoid::from_raw(std::move(raw)), std::move(kernel)};
}

HomotopyCheck is_homotopy(const GroupoidMorphism& first, const GroupoidMorphism& second,
                          std::span<const Elem> arrow_at) {
  require_same_shape(first, second);
  const FiniteGroupoid& src = *first.source;
  const FiniteGroupoid& dst = *first.target;
  if (arrow_at.size() != src.object_count()) {
    throw ShapeMismatchError("ShapeMismatch arrow family size differs from the base");
  }
  for (Obj x = 0; x < src.object_count(); ++x) {
    const Elem h = arrow_at[x];
    if (h >= dst.element_count()) {
      return {false, "arrow out of range at x=" + src.object_name(x)};
    }
    if (dst.alpha(h) != first.obj_map[x]) {
      return {false, "alpha'(h(x)) != fB1(x) at x=" + src.object_name(x)};
    }
    if (dst.beta(h) != second.obj_map[x]) {
      return {false, "beta'(h(x)) != fB2(x) at x=" + src.object_name(x)};
    }
  }
  for (Elem g = 0; g < src.element_count(); ++g) {
    const Elem lhs = dst.compose(arrow_at[src.alpha(g)], second.elem_map[g]);
    const Elem rhs = dst.compose(first.elem_map[g], arrow_at[src.beta(g)]);
    if (lhs != rhs) {
      return {false, "h(alpha(g))*f2(g) != f1(g)*h(beta(g)) at g=" + src.element_name(g)};
    }
  }
  return {true, ""};
}

std::optional<Homotopy> find_homotopy(const GroupoidMorphism& first,
                                      const GroupoidMorphism& second,
                                      std::uint64_t candidate_budget) {
  require_same_shape(first, second);
  const FiniteGroupoid& src = *first.source;
  const FiniteGroupoid& dst = *first.target;
  const std::size_t nobj = src.object_count();

  std::vector<std::vector<Elem>> candidates(nobj);
  std::uint64_t total = 1;
  for (Obj x = 0; x < nobj; ++x) {
    candidates[x] = hom_arrows(dst, first.obj_map[x], second.obj_map[x]);
    if (candidates[x].empty()) return std::nullopt;
    if (total > candidate_budget / candidates[x].size()) {
      throw SearchTooLargeError("SearchTooLarge homotopy candidate space exceeds budget");
    }
    total *= candidates[x].size();
  }

  // Check the intertwining law for g as soon as both end arrows are placed;
  // objects are assigned in increasing index order.
  std::vector<std::vector<Elem>> triggered(nobj);
  for (Elem g = 0; g < src.element_count(); ++g) {
    triggered[std::max(src.alpha(g), src.beta(g))].push_back(g);
  }

  std::vector<Elem> h(nobj, kNoElem);
  auto consistent = [&](Obj x) {
    for (const Elem g : triggered[x]) {
      const Elem lhs = dst.compose(h[src.alpha(g)], second.elem_map[g]);
      const Elem rhs = dst.compose(first.elem_map[g], h[src.beta(g)]);
      if (lhs != rhs) return false;
    }
    return true;
  };
  auto search = [&](auto&& self, Obj x) -> bool {
    if (x == nobj) return true;
    for (const Elem c : candidates[x]) {
      h[x] = c;
      if (consistent(x) && self(self, x + 1)) return true;
    }
    h[x] = kNoElem;
    return false;
  };
  if (!search(search, 0)) return std::nullopt;
  return Homotopy{first, second, std::move(h)};
}

std::vector<GroupoidMorphism> enumerate_morphisms(const FiniteGroupoid& source,
                                                  const FiniteGroupoid& target,
                                                  std::uint64_t node_budget) {
  const std::size_t ne = source.element_count();
  std::vector<GroupoidMorphism> found;
  if (ne == 0) {
    GroupoidMorphism m;
    m.source = &source;
    m.target = &target;
    found.push_back(std::move(m));
    return found;
  }
  if (target.element_count() == 0) return found;

  // Composition triples each element participates in, for incremental checks.
  std::vector<std::vector<std::array<Elem, 3>>> triples(ne);
  for (Elem a = 0; a < ne; ++a) {
    for (const Elem b : source.alpha_fibre(source.beta(a))) {
      const Elem ab = source.compose(a, b);
      const std::array<Elem, 3> t{a, b, ab};
      triples[a].push_back(t);
      if (b != a) triples[b].push_back(t);
      if (ab != a && ab != b) triples[ab].push_back(t);
    }
  }

  std::vector<Elem> elem_map(ne, kNoElem);
  std::vector<Obj> obj_map(source.object_count(), kNoObj);
  std::uint64_t nodes = 0;

  auto ends_ok = [&](Elem e, Elem c) {
    const Obj ia = source.alpha(e), ib = source.beta(e);
    if (obj_map[ia] != kNoObj && obj_map[ia] != target.alpha(c)) return false;
    if (obj_map[ib] != kNoObj && obj_map[ib] != target.beta(c)) return false;
    if (source.is_identity(e) && !target.is_identity(c)) return false;
    for (const auto& [a, b, ab] : triples[e]) {
      const Elem ma = a == e ? c : elem_map[a];
      const Elem mb = b == e ? c : elem_map[b];
      const Elem mab = ab == e ? c : elem_map[ab];
      if (ma == kNoElem || mb == kNoElem || mab == kNoElem) continue;
      if (!target.composable(ma, mb) || target.compose(ma, mb) != mab) return false;
    }
    return true;
  };

  auto search = [&](auto&& self, Elem e) -> void {
    if (e == ne) {
      GroupoidMorphism m;
      m.source = &source;
      m.target = &target;
      m.elem_map = elem_map;
      m.obj_map = obj_map;
      found.push_back(std::move(m));
      return;
    }
    const Obj ia = source.alpha(e), ib = source.beta(e);
    for (Elem c = 0; c < target.element_count(); ++c) {
      if (++nodes > node_budget) {
        throw SearchTooLargeError("SearchTooLarge morphism enumeration exceeds budget");
      }
      if (!ends_ok(e, c)) continue;
      const Obj saved_a = obj_map[ia], saved_b = obj_map[ib];
      elem_map[e] = c;
      obj_map[ia] = target.alpha(c);
      obj_map[ib] = target.beta(c);
      self(self, e + 1);
      elem_map[e] = kNoElem;
      obj_map[ia] = saved_a;
      obj_map[ib] = saved_b;
    }
  };
  search(search, 0);
  return found;
}

std::optional<FunctorPairCertificate> find_functor_pair(const FiniteGroupoid& a,
                                                        const FiniteGroupoid& b,
                                                        std::uint64_t node_budget) {
  const auto forward = enumerate_morphisms(a, b, node_budget);
  const auto backward = enumerate_morphisms(b, a, node_budget);
  const GroupoidMorphism id_a = identity_morphism(a);
  const GroupoidMorphism id_b = identity_morphism(b);
  for (const auto& f : forward) {
    for (const auto& g : backward) {
      const GroupoidMorphism round_a = compose_morphisms(f, g);  // a -> a
      auto unit = find_homotopy(round_a, id_a);
      if (!unit) continue;
      const GroupoidMorphism round_b = compose_morphisms(g, f);  // b -> b
      auto counit = find_homotopy(round_b, id_b);
      if (!counit) continue;
      return FunctorPairCertificate{f, g, std::move(unit->arrow_at),
                                    std::move(counit->arrow_at)};
    }
  }
  return std::nullopt;
}

EquivalenceDecision are_equivalent(const FiniteGroupoid& a, const FiniteGroupoid& b,
                                   std::size_t cross_check_limit) {
  EquivalenceDecision d;
  d.skeleton_a = skeleton(a);
  d.skeleton_b = skeleton(b);
  bool all_exact = true;
  std::multiset<std::string> names_a, names_b;
  std::map<std::string, std::vector<std::size_t>> by_class_a, by_class_b;
  for (std::size_t i = 0; i < d.skeleton_a.entries.size(); ++i) {
    const auto& e = d.skeleton_a.entries[i];
    all_exact = all_exact && e.isotropy.exact;
    names_a.insert(e.isotropy.name);
    by_class_a[e.isotropy.name].push_back(i);
  }
  for (std::size_t i = 0; i < d.skeleton_b.entries.size(); ++i) {
    const auto& e = d.skeleton_b.entries[i];
    all_exact = all_exact && e.isotropy.exact;
    names_b.insert(e.isotropy.name);
    by_class_b[e.isotropy.name].push_back(i);
  }
  const bool multisets_match = names_a == names_b;
  if (!multisets_match) {
    d.verdict = EquivalenceVerdict::NotEquivalent;
  } else if (!all_exact) {
    // Degraded labels only pin order and abelianness, not the class.
    d.verdict = EquivalenceVerdict::Inconclusive;
  } else {
    d.verdict = EquivalenceVerdict::Equivalent;
    for (const auto& [name, idx_a] : by_class_a) {
      const auto& idx_b = by_class_b[name];
      for (std::size_t k = 0; k < idx_a.size(); ++k) {
        OrbitMatch m;
        m.rep_a = d.skeleton_a.entries[idx_a[k]].representative;
        m.rep_b = d.skeleton_b.entries[idx_b[k]].representative;
        m.isotropy = name;
        m.size_a = d.skeleton_a.entries[idx_a[k]].orbit_size;
        m.size_b = d.skeleton_b.entries[idx_b[k]].orbit_size;
        d.matching.push_back(std::move(m));
      }
    }
  }
  if (all_exact && a.element_count() <= cross_check_limit &&
      b.element_count() <= cross_check_limit) {
    const bool brute = find_functor_pair(a, b).has_value();
    const bool skel = d.verdict == EquivalenceVerdict::Equivalent;
    if (brute != skel) {
      throw std::logic_error(
          "are_equivalent: skeleton decision disagrees with functor-pair search");
    }
    d.cross_checked = true;
  }
  return d;
}

std::vector<std::string> morphism_lines(const GroupoidMorphism& m) {
  std::vector<std::string> lines;
  for (Obj x = 0; x < m.obj_map.size(); ++x) {
    lines.push_back("fB: " + m.source->object_name(x) + " -> " +
                    m.target->object_name(m.obj_map[x]));
  }
  for (Elem e = 0; e < m.elem_map.size(); ++e) {
    lines.push_back("fG: " + m.source->element_name(e) + " -> " +
                    m.target->element_name(m.elem_map[e]));
  }
  return lines;
}

}  // namespace grpd
