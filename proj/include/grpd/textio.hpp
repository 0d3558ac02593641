#ifndef GRPD_TEXTIO_HPP
#define GRPD_TEXTIO_HPP

#include <iosfwd>
#include <string>

#include "grpd/groupoid.hpp"

namespace grpd {

class ParseError : public Error {
 public:
  using Error::Error;
};

// Line-oriented interchange format:
//
//   objects:
//   <id>
//   elements:
//   <id> <alpha> <beta> <inverse>     (inverse may be omitted)
//   compose:
//   <g> <h> <gh>
//   identities:
//   <object> <id>
//
// Blank lines and '#' comments are ignored. write_groupoid_text emits the
// canonical form, which round-trips byte-identically.
GroupoidTable parse_groupoid_text(std::istream& in, const std::string& source = "<input>");
GroupoidTable parse_groupoid_text(const std::string& text, const std::string& source = "<input>");

void write_groupoid_text(std::ostream& out, const FiniteGroupoid& g);
std::string groupoid_to_text(const FiniteGroupoid& g);

FiniteGroupoid read_groupoid_file(const std::string& path);
void write_groupoid_file(const std::string& path, const FiniteGroupoid& g);

}  // namespace grpd

#endif  // GRPD_TEXTIO_HPP
