#ifndef GRPD_CORPUS_HPP
#define GRPD_CORPUS_HPP

#include <string>
#include <vector>

#include "grpd/groupoid.hpp"

namespace grpd {

struct NamedGroupoid {
  std::string name;
  FiniteGroupoid groupoid;
};

// The built-in instances exercised by the test and acceptance suites: the
// empty and trivial groupoids, small groups, pair and equivalence-relation
// groupoids, action groupoids, a coproduct, and the tiled-rectangle
// groupoids (corner groupoids for m=n=2 and m=2,n=3, a boundary
// restriction, and the restricted transformation groupoid over the
// standard sample).
const std::vector<NamedGroupoid>& standard_corpus();

const FiniteGroupoid& corpus_groupoid(const std::string& name);

}  // namespace grpd

#endif  // GRPD_CORPUS_HPP
