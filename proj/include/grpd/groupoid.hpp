#ifndef GRPD_GROUPOID_HPP
#define GRPD_GROUPOID_HPP

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace grpd {

// Index of an object in a groupoid's base, in declaration order.
using Obj = std::uint32_t;
// Index of an element (arrow), in declaration order.
using Elem = std::uint32_t;

inline constexpr Elem kNoElem = std::numeric_limits<Elem>::max();
inline constexpr Obj kNoObj = std::numeric_limits<Obj>::max();

// ---------------------------------------------------------------------------
// Errors. Messages start with the error name token followed by the witnessing
// identifiers, so CLI output and test assertions can match on them.
// ---------------------------------------------------------------------------

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raw tables reference undeclared or duplicated identifiers.
class TableError : public Error {
 public:
  using Error::Error;
};

// Composition declared off beta(g)=alpha(h), missing on it, or with wrong ends.
class DomainError : public Error {
 public:
  using Error::Error;
};

class AssociativityError : public Error {
 public:
  using Error::Error;
};

class IdentityError : public Error {
 public:
  using Error::Error;
};

class InverseError : public Error {
 public:
  using Error::Error;
};

class EmptyBaseError : public Error {
 public:
  using Error::Error;
};

class NotAGroupError : public Error {
 public:
  using Error::Error;
};

class NotAnActionError : public Error {
 public:
  using Error::Error;
};

class NotAPartitionError : public Error {
 public:
  using Error::Error;
};

class ObjectNotFoundError : public Error {
 public:
  using Error::Error;
};

// ---------------------------------------------------------------------------
// Raw name-level tables: the build() input and the text format's in-memory
// image. Identifiers are opaque whitespace-free tokens; declaration order is
// the deterministic iteration order everywhere downstream.
// ---------------------------------------------------------------------------

struct GroupoidTable {
  struct ElementRow {
    std::string id;
    std::string alpha;
    std::string beta;
    std::optional<std::string> inverse;  // absent row -> InverseError
  };
  struct ComposeRow {
    std::string g;
    std::string h;
    std::string gh;
  };

  std::vector<std::string> objects;
  std::vector<ElementRow> elements;
  std::vector<ComposeRow> composites;
  std::vector<std::pair<std::string, std::string>> identities;  // object, element
};

// Multiplication table of a finite group; product[i * size + j] is the index
// of names[i] * names[j].
struct GroupTable {
  std::vector<std::string> names;
  std::vector<std::uint32_t> product;

  std::size_t size() const { return names.size(); }
  std::uint32_t at(std::size_t i, std::size_t j) const {
    return product[i * names.size() + j];
  }
};

// Throws NotAGroupError naming the failing law (associativity, identity,
// inverses) and its witness.
void validate_group_table(const GroupTable& table);
std::uint32_t group_identity(const GroupTable& table);
std::uint32_t group_inverse(const GroupTable& table, std::uint32_t g);
std::uint32_t group_element_order(const GroupTable& table, std::uint32_t g);
bool group_is_abelian(const GroupTable& table);

GroupTable cyclic_group_table(std::size_t n);
// Order 2n: r0..r{n-1} rotations, s0..s{n-1} reflections.
GroupTable dihedral_group_table(std::size_t n);
GroupTable quaternion_group_table();
GroupTable direct_product_table(const GroupTable& a, const GroupTable& b);

// ---------------------------------------------------------------------------
// FiniteGroupoid: immutable after construction, safe for concurrent reads.
// Every constructor materializes the full composition table and runs the
// exhaustive axiom validation; the first violation in (object, element, pair,
// triple) index order is reported.
// ---------------------------------------------------------------------------

class FiniteGroupoid {
 public:
  // Validates the five invariant families exhaustively. Throws TableError,
  // DomainError, AssociativityError, IdentityError, InverseError.
  static FiniteGroupoid build(const GroupoidTable& table);

  std::size_t object_count() const { return object_names_.size(); }
  std::size_t element_count() const { return element_names_.size(); }

  const std::string& object_name(Obj x) const { return object_names_[x]; }
  const std::string& element_name(Elem g) const { return element_names_[g]; }
  const std::vector<std::string>& object_names() const { return object_names_; }
  const std::vector<std::string>& element_names() const { return element_names_; }

  std::optional<Obj> find_object(std::string_view name) const;
  std::optional<Elem> find_element(std::string_view name) const;
  // Throwing variants for CLI-facing lookups.
  Obj object_index(std::string_view name) const;
  Elem element_index(std::string_view name) const;

  Obj alpha(Elem g) const { return alpha_[g]; }
  Obj beta(Elem g) const { return beta_[g]; }
  Elem inverse(Elem g) const { return inverse_[g]; }
  Elem identity_at(Obj x) const { return identity_at_[x]; }
  bool is_identity(Elem g) const { return identity_at_[alpha_[g]] == g; }

  bool composable(Elem g, Elem h) const { return beta_[g] == alpha_[h]; }
  // Precondition: composable(g, h).
  Elem compose(Elem g, Elem h) const;
  std::optional<Elem> try_compose(Elem g, Elem h) const;

  // Elements g with alpha(g) = x (resp. beta(g) = x), ascending.
  std::span<const Elem> alpha_fibre(Obj x) const { return alpha_fibres_[x]; }
  std::span<const Elem> beta_fibre(Obj x) const { return beta_fibres_[x]; }

  std::size_t defined_composite_count() const { return compose_entries_; }

  // Name-level export; build(to_table()) reconstructs an identical groupoid.
  GroupoidTable to_table() const;

  // Same names, same tables, in the same order.
  friend bool structurally_equal(const FiniteGroupoid& a, const FiniteGroupoid& b);

  struct Raw {
    std::vector<std::string> object_names;
    std::vector<std::string> element_names;
    std::vector<Obj> alpha;
    std::vector<Obj> beta;
    std::vector<Elem> inverse;           // kNoElem = missing
    std::vector<Elem> identity_at;       // kNoElem = missing
    std::vector<std::pair<std::uint64_t, Elem>> composites;  // key = g<<32|h
  };

  // Index-level entry point used by the constructors; runs the same
  // validation as build().
  static FiniteGroupoid from_raw(Raw raw);

 private:
  FiniteGroupoid() = default;
  void validate() const;

  std::vector<std::string> object_names_;
  std::vector<std::string> element_names_;
  std::unordered_map<std::string, Obj> object_index_;
  std::unordered_map<std::string, Elem> element_index_;
  std::vector<Obj> alpha_;
  std::vector<Obj> beta_;
  std::vector<Elem> inverse_;
  std::vector<Elem> identity_at_;
  std::vector<std::vector<Elem>> alpha_fibres_;
  std::vector<std::vector<Elem>> beta_fibres_;

  // Dense table for small groupoids, hash table above the threshold.
  bool dense_ = true;
  std::vector<Elem> dense_table_;
  std::unordered_map<std::uint64_t, Elem> sparse_table_;
  std::size_t compose_entries_ = 0;
};

// ---------------------------------------------------------------------------
// Standard constructions.
// ---------------------------------------------------------------------------

// B x B with (x,y)(y,z) = (x,z); elements named "(x,y)". Throws EmptyBaseError.
FiniteGroupoid pair_groupoid(const std::vector<std::string>& objects);

// One-object groupoid from a validated group table.
FiniteGroupoid group_as_groupoid(const GroupTable& table,
                                 const std::string& object_name = "pt");

// Transformation groupoid of a left action: triples (x, g, y) with x = g.y,
// named "x~g~y". action[g][p] is the image point index. Throws NotAnActionError.
FiniteGroupoid action_groupoid(const GroupTable& group,
                               const std::vector<std::string>& points,
                               const std::vector<std::vector<std::uint32_t>>& action);

// Full subgroupoid on the elements with both ends in the kept set. Empty
// subsets are legal and yield the empty groupoid.
FiniteGroupoid restrict_to(const FiniteGroupoid& g, const std::vector<Obj>& objects);
FiniteGroupoid restrict_to(const FiniteGroupoid& g,
                           const std::vector<std::string>& object_names);

// Wide subgroupoid of the pair groupoid whose arrows stay within blocks.
// Throws NotAPartitionError unless blocks are disjoint and cover `objects`.
FiniteGroupoid equivalence_relation_groupoid(
    const std::vector<std::string>& objects,
    const std::vector<std::vector<std::string>>& blocks);

// Coproduct; identifiers are tagged "0:", "1:", ... by summand.
FiniteGroupoid disjoint_union(std::span<const FiniteGroupoid> parts);
FiniteGroupoid disjoint_union(const FiniteGroupoid& a, const FiniteGroupoid& b);

// True iff the subset is closed under composition and inversion and contains
// every identity.
bool is_wide_subgroupoid(const FiniteGroupoid& g, std::span<const Elem> subset);

}  // namespace grpd

#endif  // GRPD_GROUPOID_HPP
