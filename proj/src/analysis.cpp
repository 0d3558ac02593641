#include "grpd/analysis.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace grpd {

namespace {

class DisjointSet {
 public:
  explicit DisjointSet(std::size_t n) : parent_(n) {
    for (std::size_t i = 0; i < n; ++i) parent_[i] = static_cast<std::uint32_t>(i);
  }

  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];  // path halving
      x = parent_[x];
    }
    return x;
  }

  void merge(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    // Smaller root wins so representatives are the least object.
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<std::uint32_t> parent_;
};

}  // namespace

OrbitPartition orbits(const FiniteGroupoid& g) {
  DisjointSet ds(g.object_count());
  for (Elem e = 0; e < g.element_count(); ++e) {
    ds.merge(g.alpha(e), g.beta(e));
  }
  OrbitPartition part;
  part.block_of.assign(g.object_count(), 0);
  std::map<std::uint32_t, std::uint32_t> root_to_block;
  for (Obj x = 0; x < g.object_count(); ++x) {
    const std::uint32_t root = ds.find(x);
    auto [it, inserted] = root_to_block.emplace(
        root, static_cast<std::uint32_t>(part.blocks.size()));
    if (inserted) part.blocks.emplace_back();
    part.block_of[x] = it->second;
    part.blocks[it->second].push_back(x);
  }
  return part;
}

GroupClassification identify_group(const GroupTable& table) {
  GroupClassification cls;
  cls.order = table.size();
  cls.abelian = group_is_abelian(table);
  if (cls.order > 8) {
    cls.exact = false;
    cls.name = "order" + std::to_string(cls.order) +
               (cls.abelian ? "-abelian" : "-nonabelian");
    return cls;
  }
  std::vector<std::uint32_t> ord;
  ord.reserve(cls.order);
  for (std::uint32_t e = 0; e < cls.order; ++e) {
    ord.push_back(group_element_order(table, e));
  }
  const std::uint32_t max_order = *std::max_element(ord.begin(), ord.end());
  const std::size_t order2 =
      static_cast<std::size_t>(std::count(ord.begin(), ord.end(), 2u));
  switch (cls.order) {
    case 1: cls.name = "trivial"; return cls;
    case 2: cls.name = "Z2"; return cls;
    case 3: cls.name = "Z3"; return cls;
    case 4: cls.name = max_order == 4 ? "Z4" : "Z2xZ2"; return cls;
    case 5: cls.name = "Z5"; return cls;
    case 6: cls.name = cls.abelian ? "Z6" : "S3"; return cls;
    case 7: cls.name = "Z7"; return cls;
    case 8:
      if (cls.abelian) {
        cls.name = max_order == 8 ? "Z8" : (max_order == 4 ? "Z4xZ2" : "Z2xZ2xZ2");
        return cls;
      }
      if (order2 == 5) {
        cls.name = "D4";
        return cls;
      }
      if (order2 == 1) {
        cls.name = "Q8";
        return cls;
      }
      break;
    default:
      break;
  }
  throw std::logic_error("identify_group: impossible invariant combination");
}

IsotropyGroup isotropy_group(const FiniteGroupoid& g, Obj x) {
  if (x >= g.object_count()) {
    throw ObjectNotFoundError("ObjectNotFound object index out of range");
  }
  IsotropyGroup iso;
  iso.base = x;
  std::vector<std::uint32_t> local(g.element_count(), 0);
  for (const Elem e : g.alpha_fibre(x)) {
    if (g.beta(e) == x) {
      local[e] = static_cast<std::uint32_t>(iso.elements.size());
      iso.elements.push_back(e);
    }
  }
  const std::size_t n = iso.elements.size();
  iso.table.names.reserve(n);
  for (const Elem e : iso.elements) iso.table.names.push_back(g.element_name(e));
  iso.table.product.resize(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      iso.table.product[a * n + b] = local[g.compose(iso.elements[a], iso.elements[b])];
    }
  }
  validate_group_table(iso.table);
  iso.cls = identify_group(iso.table);
  return iso;
}

IsotropyGroup isotropy_group(const FiniteGroupoid& g, std::string_view object_name) {
  return isotropy_group(g, g.object_index(object_name));
}

std::vector<FiniteGroupoid> orbit_decomposition(const FiniteGroupoid& g) {
  const OrbitPartition part = orbits(g);
  std::vector<FiniteGroupoid> out;
  out.reserve(part.block_count());
  for (const auto& block : part.blocks) {
    out.push_back(restrict_to(g, block));
  }
  return out;
}

Skeleton skeleton(const FiniteGroupoid& g) {
  const OrbitPartition part = orbits(g);
  Skeleton s;
  for (const auto& block : part.blocks) {
    SkeletonEntry entry;
    entry.representative = block[0];
    entry.orbit_size = block.size();
    entry.isotropy = isotropy_group(g, block[0]).cls;
    if (block.size() > 1) {
      // The class is transport-invariant; computing it at a second
      // representative guards the induced-table plumbing.
      const GroupClassification other = isotropy_group(g, block[1]).cls;
      if (other.name != entry.isotropy.name) {
        throw std::logic_error("skeleton: isotropy class differs across one orbit");
      }
    }
    s.entries.push_back(std::move(entry));
  }
  return s;
}

std::vector<std::string> skeleton_lines(const Skeleton& s, const FiniteGroupoid& g) {
  std::vector<std::string> lines;
  lines.reserve(s.entries.size());
  for (const auto& e : s.entries) {
    lines.push_back("orbit " + g.object_name(e.representative) +
                    " size=" + std::to_string(e.orbit_size) +
                    " isotropy=" + e.isotropy.name);
  }
  return lines;
}

}  // namespace grpd
