// Test-only oracles kept independent of the library code paths they check:
// a dense matrix product, a direct orbit/stabilizer computation on group
// actions, and a brute-force group isomorphism search.
#ifndef GRPD_TESTS_ORACLES_HPP
#define GRPD_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "grpd/algebra.hpp"
#include "grpd/groupoid.hpp"
#include "grpd/rational.hpp"

namespace grpd::test {

using Mat = std::vector<std::vector<Rat>>;

inline Mat matmul_oracle(const Mat& a, const Mat& b) {
  const std::size_t n = a.size();
  Mat c(n, std::vector<Rat>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Rat sum = 0;
      for (std::size_t k = 0; k < n; ++k) sum += a[i][k] * b[k][j];
      c[i][j] = sum;
    }
  }
  return c;
}

// Orbits of a group action computed directly on the point set, without any
// groupoid machinery: repeatedly apply every generator row.
inline std::vector<std::vector<std::uint32_t>> action_orbits_oracle(
    const std::vector<std::vector<std::uint32_t>>& action, std::size_t npoints) {
  std::vector<std::uint32_t> rep(npoints);
  std::iota(rep.begin(), rep.end(), 0u);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& row : action) {
      for (std::uint32_t p = 0; p < npoints; ++p) {
        const std::uint32_t q = row[p];
        const std::uint32_t r = std::min(rep[p], rep[q]);
        if (rep[p] != r || rep[q] != r) {
          rep[p] = rep[q] = r;
          changed = true;
        }
      }
    }
  }
  std::vector<std::vector<std::uint32_t>> orbits;
  for (std::uint32_t r = 0; r < npoints; ++r) {
    if (rep[r] != r) continue;
    std::vector<std::uint32_t> orbit;
    for (std::uint32_t p = 0; p < npoints; ++p) {
      if (rep[p] == r) orbit.push_back(p);
    }
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

inline std::vector<std::uint32_t> stabilizer_oracle(
    const std::vector<std::vector<std::uint32_t>>& action, std::uint32_t point) {
  std::vector<std::uint32_t> stab;
  for (std::uint32_t g = 0; g < action.size(); ++g) {
    if (action[g][point] == point) stab.push_back(g);
  }
  return stab;
}

// Brute-force isomorphism search between multiplication tables.
inline bool groups_isomorphic_oracle(const GroupTable& a, const GroupTable& b) {
  const std::size_t n = a.size();
  if (n != b.size()) return false;
  std::vector<std::uint32_t> phi(n, 0xffffffffu);
  std::vector<bool> used(n, false);
  auto consistent = [&](std::uint32_t g) {
    for (std::uint32_t h = 0; h < n; ++h) {
      if (phi[h] == 0xffffffffu) continue;
      if (phi[a.at(g, h)] != 0xffffffffu &&
          b.at(phi[g], phi[h]) != phi[a.at(g, h)]) {
        return false;
      }
      if (phi[a.at(h, g)] != 0xffffffffu &&
          b.at(phi[h], phi[g]) != phi[a.at(h, g)]) {
        return false;
      }
    }
    return true;
  };
  auto search = [&](auto&& self, std::uint32_t g) -> bool {
    if (g == n) return true;
    for (std::uint32_t c = 0; c < n; ++c) {
      if (used[c]) continue;
      phi[g] = c;
      used[c] = true;
      if (consistent(g) && self(self, g + 1)) return true;
      used[c] = false;
      phi[g] = 0xffffffffu;
    }
    return false;
  };
  return search(search, 0);
}

inline Rat random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 9);
  return Rat(num(rng), den(rng));
}

inline AlgebraElement<Rat> random_algebra_element(const FiniteGroupoid& g,
                                                  std::mt19937_64& rng,
                                                  std::size_t max_support = 10) {
  AlgebraElement<Rat> a(g);
  if (g.element_count() == 0) return a;
  std::uniform_int_distribution<std::size_t> count(0, max_support);
  std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(g.element_count() - 1));
  const std::size_t k = count(rng);
  for (std::size_t i = 0; i < k; ++i) a.set(pick(rng), random_rational(rng));
  return a;
}

}  // namespace grpd::test

#endif  // GRPD_TESTS_ORACLES_HPP
