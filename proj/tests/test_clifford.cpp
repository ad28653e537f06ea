#include <doctest.h>

#include <random>

#include "mirrorkit/clifford.hpp"
#include "mirrorkit/superpotential.hpp"

using namespace mirrorkit;

namespace {

RationalMatrix random_symmetric(std::size_t n, std::mt19937_64& gen) {
  std::uniform_int_distribution<int> d(-3, 3);
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Rational q(d(gen), 2);
      q.canonicalize();
      m(i, j) = m(j, i) = q;
    }
  return m;
}

CliffordAlgebra::Element add(CliffordAlgebra::Element a, const CliffordAlgebra::Element& b) {
  for (std::size_t k = 0; k < a.size(); ++k) a[k] += b[k];
  return a;
}

CliffordAlgebra::Element scaled(CliffordAlgebra::Element a, const Rational& c) {
  for (auto& v : a) v *= c;
  return a;
}

}  // namespace

TEST_CASE("zero form gives the exterior algebra") {
  const CliffordAlgebra cl(RationalMatrix(3, 3));
  CHECK_FALSE(cl.nondegenerate());
  const auto zero = CliffordAlgebra::Element(cl.dimension(), 0);
  for (std::size_t i = 0; i < 3; ++i) CHECK(cl.multiply(cl.generator(i), cl.generator(i)) == zero);
  CHECK(cl.multiply(cl.generator(0), cl.generator(1)) == scaled(cl.multiply(cl.generator(1), cl.generator(0)), -1));
  CHECK(cl.associative());
}

TEST_CASE("identity form on one generator squares to 1") {
  const CliffordAlgebra cl(RationalMatrix::identity(1));
  CHECK(cl.dimension() == 2);
  CHECK(cl.multiply(cl.generator(0), cl.generator(0)) == cl.unit());
  CHECK(cl.nondegenerate());
}

TEST_CASE("blade products follow the generator relations") {
  // e1 e2 with B = I: (e1 e2)^2 = -1
  const CliffordAlgebra cl(RationalMatrix::identity(2));
  const auto e12 = cl.basis(0b11);
  CHECK(cl.multiply(e12, e12) == scaled(cl.unit(), -1));
  CHECK(CliffordAlgebra::blade_name(0b101) == "e1e3");
  CHECK(CliffordAlgebra::blade_name(0) == "1");
}

TEST_CASE("Hessian Clifford algebras satisfy the relations and associate") {
  for (int n = 1; n <= 4; ++n) {
    CAPTURE(n);
    const auto cl = clifford_from_form(hessian_at_symmetric_point(n));
    CHECK(cl.nondegenerate());
    CHECK(cl.anticommutators_hold());
    CHECK(cl.associative());
  }
}

TEST_CASE("anticommutators read from the table match 2B") {
  std::mt19937_64 gen(9);
  const auto form = random_symmetric(4, gen);
  const CliffordAlgebra cl(form);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      const auto lhs = add(cl.multiply(cl.generator(i), cl.generator(j)), cl.multiply(cl.generator(j), cl.generator(i)));
      CHECK(lhs == scaled(cl.unit(), 2 * form(i, j)));
    }
}

TEST_CASE("random forms: associativity, serial and parallel agree") {
  std::mt19937_64 gen(21);
  for (std::size_t n = 1; n <= 4; ++n) {
    const CliffordAlgebra cl(random_symmetric(n, gen));
    CHECK(cl.associative());
    CHECK(cl.associative() == cl.associative_serial());
    CHECK(cl.anticommutators_hold());
  }
}

TEST_CASE("invalid forms are rejected") {
  RationalMatrix asym(2, 2);
  asym(0, 1) = 1;
  CHECK_THROWS_AS(CliffordAlgebra{asym}, std::invalid_argument);
  CHECK_THROWS_AS(CliffordAlgebra{RationalMatrix(2, 3)}, std::invalid_argument);
}
