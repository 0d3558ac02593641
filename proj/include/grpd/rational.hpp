#ifndef GRPD_RATIONAL_HPP
#define GRPD_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace grpd {

// Exact arbitrary-precision rational scalar used throughout: algebra
// coefficients, plane coordinates, lattice membership tests.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline bool is_integer(const Rat& r) {
  return denominator(r) == 1;
}

inline bool is_even_integer(const Rat& r) {
  return is_integer(r) && numerator(r) % 2 == 0;
}

// Membership in (1/2)Z: r = k/2 for integral k.
inline bool is_half_integer(const Rat& r) {
  return denominator(r) == 1 || denominator(r) == 2;
}

// Canonical form: "p/q" reduced, "p" when q == 1.
inline std::string rat_to_string(const Rat& r) {
  return r.str();
}

// Fixed "p/q" form (q >= 1), used where the line schema pins it.
inline std::string rat_to_fraction_string(const Rat& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

// Accepts "p" or "p/q" with optional leading '-'. Returns nullopt on
// malformed input or zero denominator.
std::optional<Rat> parse_rational(std::string_view token);

}  // namespace grpd

#endif  // GRPD_RATIONAL_HPP
