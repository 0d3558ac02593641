#include <doctest.h>

#include <random>
#include <set>
#include <sstream>

#include "grpd/algebra.hpp"
#include "grpd/corpus.hpp"
#include "oracles.hpp"

using namespace grpd;

namespace {

AlgebraElement<Rat> from_rows(const FiniteGroupoid& pair_g, const test::Mat& rows) {
  DenseMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows.size(); ++j) m.at(i, j) = rows[i][j];
  }
  return from_matrix(pair_g, m);
}

}  // namespace

TEST_CASE("pair-groupoid convolution reproduces the 2x2 matrix product") {
  const auto& pair2 = corpus_groupoid("pair2");
  const test::Mat ra{{1, 2}, {3, 4}};
  const test::Mat rb{{5, 6}, {7, 8}};
  const test::Mat expected = test::matmul_oracle(ra, rb);
  CHECK(expected == test::Mat{{19, 22}, {43, 50}});

  const AlgebraElement<Rat> a = from_rows(pair2, ra);
  const AlgebraElement<Rat> b = from_rows(pair2, rb);
  const DenseMatrix m = to_matrix(convolve(a, b));
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) CHECK(m.at(i, j) == expected[i][j]);
  }
  // And back again through from_matrix.
  CHECK(from_matrix(pair2, m) == convolve(a, b));
}

TEST_CASE("delta at identities is a two-sided unit") {
  std::mt19937_64 rng(23);
  for (const auto* name : {"pair2", "z2", "tiling-corners-2x2"}) {
    const auto& g = corpus_groupoid(name);
    const AlgebraElement<Rat> unit = convolution_identity(g);
    for (int trial = 0; trial < 20; ++trial) {
      const AlgebraElement<Rat> a = test::random_algebra_element(g, rng);
      CHECK(convolve(a, unit) == a);
      CHECK(convolve(unit, a) == a);
    }
  }
}

TEST_CASE("group algebra of Z2: delta_s squared is delta_e") {
  const auto& z2 = corpus_groupoid("z2");
  AlgebraElement<Rat> ds(z2);
  ds.set(1, 1);  // the non-identity element
  const AlgebraElement<Rat> sq = convolve(ds, ds);
  CHECK(sq.at(z2.identity_at(0)) == 1);
  CHECK(sq.support_size() == 1);
}

TEST_CASE("Z2 group algebra multiplies like (a0*b0+a1*b1, a0*b1+a1*b0)") {
  const auto& z2 = corpus_groupoid("z2");
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 50; ++trial) {
    AlgebraElement<Rat> a(z2), b(z2);
    const Rat a0 = test::random_rational(rng), a1 = test::random_rational(rng);
    const Rat b0 = test::random_rational(rng), b1 = test::random_rational(rng);
    a.set(0, a0);
    a.set(1, a1);
    b.set(0, b0);
    b.set(1, b1);
    for (const auto& prod : {convolve(a, b), convolve_symmetric(a, b)}) {
      CHECK(prod.at(0) == a0 * b0 + a1 * b1);
      CHECK(prod.at(1) == a0 * b1 + a1 * b0);
    }
  }
}

TEST_CASE("fibre and symmetric convolution agree on random sparse pairs") {
  const auto& pair5 = corpus_groupoid("pair5");
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const AlgebraElement<Rat> a = test::random_algebra_element(pair5, rng);
    const AlgebraElement<Rat> b = test::random_algebra_element(pair5, rng);
    CHECK(convolve(a, b) == convolve_symmetric(a, b));
  }
}

TEST_CASE("convolution with empty support is zero") {
  const auto& pair2 = corpus_groupoid("pair2");
  const AlgebraElement<Rat> zero(pair2);
  AlgebraElement<Rat> b(pair2);
  b.set(1, Rat(3, 7));
  CHECK(convolve(zero, b).is_zero());
  CHECK(convolve_symmetric(zero, b).is_zero());
}

TEST_CASE("convolution identity maps to the identity matrix") {
  const auto& pair3 = corpus_groupoid("pair3");
  const DenseMatrix m = to_matrix(convolution_identity(pair3));
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) CHECK(m.at(i, j) == Rat(i == j ? 1 : 0));
  }
  const auto& d4 = corpus_groupoid("d4");
  const AlgebraElement<Rat> unit = convolution_identity(d4);
  CHECK(unit.support_size() == 1);
  CHECK(unit.at(d4.identity_at(0)) == 1);
}

TEST_CASE("mixing groupoids or non-pair bases is rejected") {
  const auto& pair2 = corpus_groupoid("pair2");
  const auto& z2 = corpus_groupoid("z2");
  const AlgebraElement<Rat> a(pair2);
  const AlgebraElement<Rat> b(z2);
  CHECK_THROWS_AS(convolve(a, b), GroupoidMismatchError);
  CHECK_THROWS_AS(to_matrix(AlgebraElement<Rat>(z2)), NotAPairGroupoidError);
  // Wide subgroupoids of a pair groupoid with missing arrows are not pair
  // groupoids either.
  CHECK_THROWS_AS(to_matrix(AlgebraElement<Rat>(corpus_groupoid("eqrel-12-3"))),
                  NotAPairGroupoidError);
}

TEST_CASE("associativity and bilinearity hold exactly across the corpus") {
  std::mt19937_64 rng(37);
  for (const auto& entry : standard_corpus()) {
    const FiniteGroupoid& g = entry.groupoid;
    if (g.element_count() > 200) continue;
    for (int trial = 0; trial < 5; ++trial) {
      const AlgebraElement<Rat> a = test::random_algebra_element(g, rng);
      const AlgebraElement<Rat> b = test::random_algebra_element(g, rng);
      const AlgebraElement<Rat> c = test::random_algebra_element(g, rng);
      CHECK(convolve(convolve(a, b), c) == convolve(a, convolve(b, c)));
      CHECK(convolve(a, b + c) == convolve(a, b) + convolve(a, c));
      const Rat s = test::random_rational(rng);
      CHECK(convolve(s * a, b) == s * convolve(a, b));
      CHECK(convolve(a, b) == convolve_symmetric(a, b));
    }
  }
}

TEST_CASE("the pair algebra is noncommutative, the discrete one commutative") {
  const auto& pair2 = corpus_groupoid("pair2");
  const AlgebraElement<Rat> a = from_rows(pair2, {{0, 1}, {0, 0}});
  const AlgebraElement<Rat> b = from_rows(pair2, {{0, 0}, {1, 0}});
  CHECK_FALSE(convolve(a, b) == convolve(b, a));

  const auto& discrete = corpus_groupoid("discrete3");
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    const AlgebraElement<Rat> u = test::random_algebra_element(discrete, rng);
    const AlgebraElement<Rat> v = test::random_algebra_element(discrete, rng);
    CHECK(convolve(u, v) == convolve(v, u));
  }
}

TEST_CASE("support of a product stays inside the composable products") {
  std::mt19937_64 rng(43);
  for (const auto* name : {"pair3", "tiling-restricted-std", "s3"}) {
    const auto& g = corpus_groupoid(name);
    for (int trial = 0; trial < 10; ++trial) {
      const AlgebraElement<Rat> a = test::random_algebra_element(g, rng);
      const AlgebraElement<Rat> b = test::random_algebra_element(g, rng);
      std::set<Elem> allowed;
      for (const auto& [k, ck] : a.coefficients()) {
        for (const auto& [l, cl] : b.coefficients()) {
          if (g.composable(k, l)) allowed.insert(g.compose(k, l));
        }
      }
      const AlgebraElement<Rat> product = convolve(a, b);
      for (const auto& [e, coef] : product.coefficients()) {
        CHECK(allowed.count(e) == 1);
      }
    }
  }
}

TEST_CASE("Gaussian rational coefficients work through both formulas") {
  const auto& z2 = corpus_groupoid("z2");
  AlgebraElement<GaussianRat> a(z2);
  a.set(1, GaussianRat(Rat(0), Rat(1)));  // i * delta_s
  const AlgebraElement<GaussianRat> sq = convolve(a, a);
  // (i delta_s)^2 = -delta_e.
  CHECK(sq.at(0) == GaussianRat(Rat(-1), Rat(0)));
  CHECK(sq.support_size() == 1);
  CHECK(convolve(a, a) == convolve_symmetric(a, a));
}

TEST_CASE("serialization uses the fixed num/den coefficient form") {
  const auto& pair2 = corpus_groupoid("pair2");
  AlgebraElement<Rat> a(pair2);
  a.set(pair2.element_index("(1,2)"), Rat(-3, 6));
  a.set(pair2.element_index("(1,1)"), Rat(2));
  const auto lines = algebra_element_lines(a);
  REQUIRE(lines.size() == 2);
  CHECK(lines[0] == "coef (1,1) 2/1");
  CHECK(lines[1] == "coef (1,2) -1/2");
  std::istringstream in(lines[0] + "\n" + lines[1] + "\n");
  CHECK(parse_algebra_element(pair2, in) == a);

  const auto mlines = matrix_lines(to_matrix(a));
  REQUIRE(mlines.size() == 3);
  CHECK(mlines[0] == "2");
  CHECK(mlines[1] == "2 -1/2");
  CHECK(mlines[2] == "0 0");
}
