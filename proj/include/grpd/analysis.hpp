#ifndef GRPD_ANALYSIS_HPP
#define GRPD_ANALYSIS_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "grpd/groupoid.hpp"

namespace grpd {

// Partition of the base into orbits. Blocks are sorted ascending and listed
// by representative (their least object), so output order is deterministic.
struct OrbitPartition {
  std::vector<std::vector<Obj>> blocks;
  std::vector<std::uint32_t> block_of;  // object index -> block index

  Obj representative(std::size_t block) const { return blocks[block][0]; }
  std::size_t block_count() const { return blocks.size(); }
};

OrbitPartition orbits(const FiniteGroupoid& g);

// Isomorphism-class label for groups of order <= 8, decided by
// (order, abelianness, multiset of element orders). Larger groups degrade to
// an order/abelianness label with exact=false.
struct GroupClassification {
  std::string name;
  std::size_t order = 0;
  bool abelian = true;
  bool exact = true;
};

GroupClassification identify_group(const GroupTable& table);

struct IsotropyGroup {
  Obj base = kNoObj;
  std::vector<Elem> elements;  // loops at base, ascending
  GroupTable table;            // induced multiplication, names = element names
  GroupClassification cls;
};

IsotropyGroup isotropy_group(const FiniteGroupoid& g, Obj x);
IsotropyGroup isotropy_group(const FiniteGroupoid& g, std::string_view object_name);

// Restrictions of g to its orbit blocks, in block order. Their disjoint
// union is isomorphic to g under the tag-stripping relabeling.
std::vector<FiniteGroupoid> orbit_decomposition(const FiniteGroupoid& g);

struct SkeletonEntry {
  Obj representative = kNoObj;
  std::size_t orbit_size = 0;
  GroupClassification isotropy;
};

// Per-orbit (size, isotropy class) summary; entries ordered by representative.
// The class is computed at two representatives per orbit when available and
// must agree.
struct Skeleton {
  std::vector<SkeletonEntry> entries;
};

Skeleton skeleton(const FiniteGroupoid& g);

// "orbit <rep> size=<k> isotropy=<name>" lines.
std::vector<std::string> skeleton_lines(const Skeleton& s, const FiniteGroupoid& g);

}  // namespace grpd

#endif  // GRPD_ANALYSIS_HPP
