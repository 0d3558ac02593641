#include "grpd/algebra.hpp"

#include <fstream>
#include <sstream>

#include "grpd/textio.hpp"

namespace grpd {

DenseMatrix matrix_multiply(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.n != b.n) {
    throw GroupoidMismatchError("GroupoidMismatch matrix dimensions differ");
  }
  DenseMatrix out(a.n);
  for (std::size_t i = 0; i < a.n; ++i) {
    for (std::size_t k = 0; k < a.n; ++k) {
      const Rat& aik = a.at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < a.n; ++j) {
        out.at(i, j) += aik * b.at(k, j);
      }
    }
  }
  return out;
}

std::vector<Elem> pair_structure(const FiniteGroupoid& g) {
  const std::size_t n = g.object_count();
  if (g.element_count() != n * n) {
    throw NotAPairGroupoidError(
        "NotAPairGroupoid element count is not the square of the object count");
  }
  std::vector<Elem> at(n * n, kNoElem);
  for (Elem e = 0; e < g.element_count(); ++e) {
    auto& cell = at[static_cast<std::size_t>(g.alpha(e)) * n + g.beta(e)];
    if (cell != kNoElem) {
      throw NotAPairGroupoidError("NotAPairGroupoid parallel arrows between " +
                                  g.object_name(g.alpha(e)) + " and " +
                                  g.object_name(g.beta(e)));
    }
    cell = e;
  }
  return at;
}

DenseMatrix to_matrix(const AlgebraElement<Rat>& a) {
  const FiniteGroupoid& g = a.owner();
  const auto at = pair_structure(g);
  const std::size_t n = g.object_count();
  DenseMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m.at(i, j) = a.at(at[i * n + j]);
    }
  }
  return m;
}

AlgebraElement<Rat> from_matrix(const FiniteGroupoid& pair_like, const DenseMatrix& m) {
  const auto at = pair_structure(pair_like);
  if (m.n != pair_like.object_count()) {
    throw NotAPairGroupoidError("NotAPairGroupoid matrix dimension differs from base");
  }
  AlgebraElement<Rat> a(pair_like);
  for (std::size_t i = 0; i < m.n; ++i) {
    for (std::size_t j = 0; j < m.n; ++j) {
      a.set(at[i * m.n + j], m.at(i, j));
    }
  }
  return a;
}

std::vector<std::string> algebra_element_lines(const AlgebraElement<Rat>& a) {
  std::vector<std::string> lines;
  for (const auto& [g, c] : a.coefficients()) {
    lines.push_back("coef " + a.owner().element_name(g) + " " +
                    rat_to_fraction_string(c));
  }
  return lines;
}

AlgebraElement<Rat> parse_algebra_element(const FiniteGroupoid& g, std::istream& in,
                                          const std::string& source) {
  AlgebraElement<Rat> a(g);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ss(line);
    std::string head, elem, value;
    if (!(ss >> head) || head[0] == '#') continue;
    if (head != "coef" || !(ss >> elem >> value)) {
      throw ParseError("ParseError " + source + ":" + std::to_string(lineno) +
                       ": expected 'coef <element> <num>/<den>'");
    }
    const auto e = g.find_element(elem);
    if (!e) {
      throw ParseError("ParseError " + source + ":" + std::to_string(lineno) +
                       ": unknown element '" + elem + "'");
    }
    const auto r = parse_rational(value);
    if (!r) {
      throw ParseError("ParseError " + source + ":" + std::to_string(lineno) +
                       ": malformed rational '" + value + "'");
    }
    a.add(*e, *r);
  }
  return a;
}

AlgebraElement<Rat> read_algebra_element_file(const FiniteGroupoid& g,
                                              const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("ParseError " + path + ":0: cannot open file");
  return parse_algebra_element(g, in, path);
}

std::vector<std::string> matrix_lines(const DenseMatrix& m) {
  std::vector<std::string> lines;
  lines.push_back(std::to_string(m.n));
  for (std::size_t i = 0; i < m.n; ++i) {
    std::string row;
    for (std::size_t j = 0; j < m.n; ++j) {
      if (j) row += " ";
      row += rat_to_string(m.at(i, j));
    }
    lines.push_back(std::move(row));
  }
  return lines;
}

}  // namespace grpd
