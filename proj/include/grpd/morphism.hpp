#ifndef GRPD_MORPHISM_HPP
#define GRPD_MORPHISM_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "grpd/analysis.hpp"
#include "grpd/groupoid.hpp"

namespace grpd {

class NotAMorphismError : public Error {
 public:
  using Error::Error;
};

class ShapeMismatchError : public Error {
 public:
  using Error::Error;
};

class SearchTooLargeError : public Error {
 public:
  using Error::Error;
};

// A functor of groupoids: maps elements and objects, intertwines alpha and
// beta, preserves composition and identities (inverse preservation follows).
// Holds non-owning pointers; the groupoids must outlive the morphism.
struct GroupoidMorphism {
  const FiniteGroupoid* source = nullptr;
  const FiniteGroupoid* target = nullptr;
  std::vector<Elem> elem_map;  // indexed by source element
  std::vector<Obj> obj_map;    // indexed by source object

  Elem apply(Elem g) const { return elem_map[g]; }
  Obj apply_obj(Obj x) const { return obj_map[x]; }
};

bool operator==(const GroupoidMorphism& a, const GroupoidMorphism& b);

// Checks all four functor laws exhaustively; throws NotAMorphismError naming
// the violated law and a witness.
GroupoidMorphism validate_morphism(const FiniteGroupoid& source,
                                   const FiniteGroupoid& target,
                                   std::vector<Elem> elem_map,
                                   std::vector<Obj> obj_map);

GroupoidMorphism identity_morphism(const FiniteGroupoid& g);

// Composite "first then second"; throws ShapeMismatchError unless
// first.target == second.source.
GroupoidMorphism compose_morphisms(const GroupoidMorphism& first,
                                   const GroupoidMorphism& second);

// The (alpha, beta) morphism into the pair groupoid over the same base,
// with its image (an equivalence-relation groupoid over the base) and
// kernel (every element whose ends coincide under the morphism, i.e. the
// union of the isotropy groups).
struct CanonicalPairMorphism {
  std::unique_ptr<const FiniteGroupoid> pair_target;  // stable address
  GroupoidMorphism morphism;                          // source G, target *pair_target
  FiniteGroupoid image;                               // wide subgroupoid of the pair groupoid
  std::vector<Elem> kernel;                           // source elements, ascending
};

CanonicalPairMorphism canonical_pair_morphism(const FiniteGroupoid& g);

// A natural transformation from first to second: one target arrow per source
// object, intertwining the two functors.
struct Homotopy {
  GroupoidMorphism first;
  GroupoidMorphism second;
  std::vector<Elem> arrow_at;  // indexed by source object
};

struct HomotopyCheck {
  bool valid = false;
  std::string failure;  // witness when !valid
};

// Throws ShapeMismatchError when the morphisms do not share source/target or
// the arrow family has the wrong length.
HomotopyCheck is_homotopy(const GroupoidMorphism& first, const GroupoidMorphism& second,
                          std::span<const Elem> arrow_at);

// Exhaustive backtracking over candidate arrows in deterministic order;
// nullopt means no homotopy exists. Throws SearchTooLargeError when the
// candidate space exceeds the budget (default 10^6 assignments).
std::optional<Homotopy> find_homotopy(const GroupoidMorphism& first,
                                      const GroupoidMorphism& second,
                                      std::uint64_t candidate_budget = 1000000);

// All morphisms source -> target in deterministic order. Throws
// SearchTooLargeError when the backtracking explores more than node_budget
// partial assignments.
std::vector<GroupoidMorphism> enumerate_morphisms(const FiniteGroupoid& source,
                                                  const FiniteGroupoid& target,
                                                  std::uint64_t node_budget = 4000000);

// A homotopy-inverse pair of functors witnessing equivalence.
struct FunctorPairCertificate {
  GroupoidMorphism forward;   // a -> b
  GroupoidMorphism backward;  // b -> a
  std::vector<Elem> unit;     // homotopy backward(forward(.)) => id_a
  std::vector<Elem> counit;   // homotopy forward(backward(.)) => id_b
};

// Brute-force equivalence decision; nullopt = provably no such pair.
std::optional<FunctorPairCertificate> find_functor_pair(const FiniteGroupoid& a,
                                                        const FiniteGroupoid& b,
                                                        std::uint64_t node_budget = 4000000);

enum class EquivalenceVerdict { Equivalent, NotEquivalent, Inconclusive };

struct OrbitMatch {
  Obj rep_a = kNoObj;
  Obj rep_b = kNoObj;
  std::string isotropy;
  std::size_t size_a = 0;
  std::size_t size_b = 0;
};

struct EquivalenceDecision {
  EquivalenceVerdict verdict = EquivalenceVerdict::NotEquivalent;
  Skeleton skeleton_a;
  Skeleton skeleton_b;
  std::vector<OrbitMatch> matching;  // one entry per orbit when Equivalent
  bool cross_checked = false;        // functor-pair search ran and agreed
};

// Skeleton comparison: equivalent iff the multisets of isotropy classes
// (orbit sizes excluded) coincide. Degraded (order > 8) labels force an
// Inconclusive verdict when they match. Inputs with at most
// cross_check_limit elements each are cross-checked against the functor-pair
// search; disagreement is a logic error.
EquivalenceDecision are_equivalent(const FiniteGroupoid& a, const FiniteGroupoid& b,
                                   std::size_t cross_check_limit = 12);

// Morphism file block serialization: "fB: x -> x'" / "fG: g -> g'" lines.
std::vector<std::string> morphism_lines(const GroupoidMorphism& m);

}  // namespace grpd

#endif  // GRPD_MORPHISM_HPP
