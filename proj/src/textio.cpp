#include "grpd/textio.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace grpd {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream ss(line);
  std::string tok;
  while (ss >> tok) {
    if (tok[0] == '#') break;
    tokens.push_back(tok);
  }
  return tokens;
}

[[noreturn]] void fail(const std::string& source, std::size_t line,
                       const std::string& detail) {
  throw ParseError("ParseError " + source + ":" + std::to_string(line) + ": " + detail);
}

}  // namespace

GroupoidTable parse_groupoid_text(std::istream& in, const std::string& source) {
  GroupoidTable table;
  enum class Section { None, Objects, Elements, Compose, Identities };
  Section section = Section::None;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    if (tokens.size() == 1 && tokens[0].back() == ':') {
      const std::string& header = tokens[0];
      if (header == "objects:") {
        section = Section::Objects;
      } else if (header == "elements:") {
        section = Section::Elements;
      } else if (header == "compose:") {
        section = Section::Compose;
      } else if (header == "identities:") {
        section = Section::Identities;
      } else {
        fail(source, lineno, "unknown section header '" + header + "'");
      }
      continue;
    }
    switch (section) {
      case Section::None:
        fail(source, lineno, "content before any section header");
      case Section::Objects:
        if (tokens.size() != 1) fail(source, lineno, "expected one object identifier");
        table.objects.push_back(tokens[0]);
        break;
      case Section::Elements: {
        if (tokens.size() != 3 && tokens.size() != 4) {
          fail(source, lineno, "expected 'id alpha beta inverse'");
        }
        GroupoidTable::ElementRow row;
        row.id = tokens[0];
        row.alpha = tokens[1];
        row.beta = tokens[2];
        if (tokens.size() == 4) row.inverse = tokens[3];
        table.elements.push_back(std::move(row));
        break;
      }
      case Section::Compose:
        if (tokens.size() != 3) fail(source, lineno, "expected 'g h gh'");
        table.composites.push_back({tokens[0], tokens[1], tokens[2]});
        break;
      case Section::Identities:
        if (tokens.size() != 2) fail(source, lineno, "expected 'object id'");
        table.identities.emplace_back(tokens[0], tokens[1]);
        break;
    }
  }
  return table;
}

GroupoidTable parse_groupoid_text(const std::string& text, const std::string& source) {
  std::istringstream in(text);
  return parse_groupoid_text(in, source);
}

void write_groupoid_text(std::ostream& out, const FiniteGroupoid& g) {
  const GroupoidTable t = g.to_table();
  out << "objects:\n";
  for (const auto& name : t.objects) out << name << "\n";
  out << "elements:\n";
  for (const auto& row : t.elements) {
    out << row.id << " " << row.alpha << " " << row.beta << " " << *row.inverse << "\n";
  }
  out << "compose:\n";
  for (const auto& row : t.composites) {
    out << row.g << " " << row.h << " " << row.gh << "\n";
  }
  out << "identities:\n";
  for (const auto& [x, e] : t.identities) out << x << " " << e << "\n";
}

std::string groupoid_to_text(const FiniteGroupoid& g) {
  std::ostringstream out;
  write_groupoid_text(out, g);
  return out.str();
}

FiniteGroupoid read_groupoid_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("ParseError " + path + ":0: cannot open file");
  return FiniteGroupoid::build(parse_groupoid_text(in, path));
}

void write_groupoid_file(const std::string& path, const FiniteGroupoid& g) {
  std::ofstream out(path);
  if (!out) throw ParseError("ParseError " + path + ":0: cannot open file for writing");
  write_groupoid_text(out, g);
}

}  // namespace grpd
