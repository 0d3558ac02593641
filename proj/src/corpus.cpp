#include "grpd/corpus.hpp"

#include <stdexcept>

#include "grpd/tiling.hpp"

namespace grpd {

namespace {

FiniteGroupoid make_empty() {
  return FiniteGroupoid::from_raw(FiniteGroupoid::Raw{});
}

FiniteGroupoid make_swap_action() {
  GroupTable z2 = cyclic_group_table(2);
  return action_groupoid(z2, {"1", "2"}, {{0, 1}, {1, 0}});
}

FiniteGroupoid make_fix3_action() {
  GroupTable z2 = cyclic_group_table(2);
  return action_groupoid(z2, {"1", "2", "3"}, {{0, 1, 2}, {1, 0, 2}});
}

std::vector<NamedGroupoid> build_corpus() {
  std::vector<NamedGroupoid> corpus;
  corpus.push_back({"empty", make_empty()});
  corpus.push_back({"trivial", group_as_groupoid(cyclic_group_table(1))});
  corpus.push_back({"discrete3", equivalence_relation_groupoid(
                                     {"a", "b", "c"}, {{"a"}, {"b"}, {"c"}})});
  corpus.push_back({"z2", group_as_groupoid(cyclic_group_table(2))});
  corpus.push_back({"z3", group_as_groupoid(cyclic_group_table(3))});
  corpus.push_back({"z4", group_as_groupoid(cyclic_group_table(4))});
  corpus.push_back({"z2xz2", group_as_groupoid(direct_product_table(
                                 cyclic_group_table(2), cyclic_group_table(2)))});
  corpus.push_back({"z6", group_as_groupoid(cyclic_group_table(6))});
  corpus.push_back({"s3", group_as_groupoid(dihedral_group_table(3))});
  corpus.push_back({"d4", group_as_groupoid(dihedral_group_table(4))});
  corpus.push_back({"q8", group_as_groupoid(quaternion_group_table())});
  corpus.push_back({"pair2", pair_groupoid({"1", "2"})});
  corpus.push_back({"pair3", pair_groupoid({"1", "2", "3"})});
  corpus.push_back({"pair5", pair_groupoid({"1", "2", "3", "4", "5"})});
  corpus.push_back({"eqrel-12-3", equivalence_relation_groupoid(
                                      {"1", "2", "3"}, {{"1", "2"}, {"3"}})});
  corpus.push_back({"act-swap", make_swap_action()});
  corpus.push_back({"act-fix3", make_fix3_action()});
  corpus.push_back({"pair2-u-z2",
                    disjoint_union(pair_groupoid({"1", "2"}),
                                   group_as_groupoid(cyclic_group_table(2)))});
  corpus.push_back({"tiling-corners-2x2", local_groupoid_on_corners({2, 2})});
  corpus.push_back(
      {"tiling-corners-2x2-boundary",
       restrict_to(local_groupoid_on_corners({2, 2}),
                   std::vector<std::string>{"(0,0)", "(0,1)", "(0,2)", "(2,0)", "(2,2)",
                                            "(4,0)", "(4,1)", "(4,2)"})});
  corpus.push_back({"tiling-corners-2x3", local_groupoid_on_corners({2, 3})});
  corpus.push_back({"tiling-restricted-std",
                    restricted_action_groupoid({2, 2}, standard_restricted_sample())});
  return corpus;
}

}  // namespace

const std::vector<NamedGroupoid>& standard_corpus() {
  static const std::vector<NamedGroupoid> corpus = build_corpus();
  return corpus;
}

const FiniteGroupoid& corpus_groupoid(const std::string& name) {
  for (const auto& entry : standard_corpus()) {
    if (entry.name == name) return entry.groupoid;
  }
  throw std::out_of_range("no corpus groupoid named " + name);
}

}  // namespace grpd
