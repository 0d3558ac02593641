#include "grpd/rational.hpp"

#include <cctype>

namespace grpd {

namespace {

bool parse_int(std::string_view s, Int& out) {
  if (s.empty()) return false;
  std::size_t i = 0;
  bool neg = false;
  if (s[0] == '-') {
    neg = true;
    i = 1;
    if (s.size() == 1) return false;
  }
  Int v = 0;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    v = v * 10 + (s[i] - '0');
  }
  out = neg ? Int(-v) : v;
  return true;
}

}  // namespace

std::optional<Rat> parse_rational(std::string_view token) {
  Int num, den = 1;
  auto slash = token.find('/');
  if (slash == std::string_view::npos) {
    if (!parse_int(token, num)) return std::nullopt;
  } else {
    if (!parse_int(token.substr(0, slash), num)) return std::nullopt;
    if (!parse_int(token.substr(slash + 1), den)) return std::nullopt;
    if (den == 0) return std::nullopt;
  }
  return Rat(num, den);
}

}  // namespace grpd
