#include <doctest.h>

#include <algorithm>
#include <set>

#include "mirrorkit/fs_combinatorics.hpp"

using namespace mirrorkit;

namespace {

std::multiset<long> degrees(int n, const std::vector<CoverThimble>& ts) {
  std::multiset<long> out;
  for (const auto& t : ts) out.insert(t.mirror_degree(n));
  return out;
}

}  // namespace

TEST_CASE("euclidean division keeps the remainder in [0, divisor)") {
  CHECK(euclidean_division(4, 3).quotient == 1);
  CHECK(euclidean_division(4, 3).remainder == 1);
  CHECK(euclidean_division(-1, 3).quotient == -1);
  CHECK(euclidean_division(-1, 3).remainder == 2);
  CHECK(euclidean_division(-6, 3).remainder == 0);
  for (long a = -30; a <= 30; ++a) {
    const auto [q, r] = euclidean_division(a, 4);
    CHECK(q * 4 + r == a);
    CHECK((r >= 0 && r < 4));
  }
}

TEST_CASE("mirror degree determines the cover thimble") {
  for (int n = 1; n <= 5; ++n)
    for (long d = -25; d <= 25; ++d) {
      const auto t = CoverThimble::from_degree(n, d);
      CHECK(t.mirror_degree(n) == d);
      CHECK((t.k >= 0 && t.k <= n));
    }
}

TEST_CASE("psi decomposition examples") {
  CHECK(psi_decompose(2, 0) == std::vector<CoverThimble>{{0, 0}, {1, 0}, {2, 0}});
  CHECK(psi_decompose(2, 4) == std::vector<CoverThimble>{{0, 1}, {1, 1}, {2, 2}});
  CHECK(psi_decompose(2, -1) == std::vector<CoverThimble>{{0, -1}, {1, 0}, {2, 0}});
  CHECK(degrees(2, psi_decompose(2, 4)) == std::multiset<long>{2, 3, 4});
  CHECK(degrees(2, psi_decompose(2, -1)) == std::multiset<long>{-3, -2, -1});
}

TEST_CASE("psi degree multiset is {j - k}") {
  for (int n = 1; n <= 6; ++n)
    for (long j = -20; j <= 20; ++j) {
      std::multiset<long> expected;
      for (long k = 0; k <= n; ++k) expected.insert(j - k);
      CHECK(degrees(n, psi_decompose(n, j)) == expected);
    }
}

TEST_CASE("Serre twist") {
  const auto t = serre_twist(2, {0, 1});
  CHECK(t.thimble == CoverThimble{0, 0});
  CHECK(t.shift == 2);
  CHECK(t.thimble.mirror_degree(2) == 0);
  for (int n = 1; n <= 4; ++n)
    for (int k = 0; k <= n; ++k)
      for (long i = -3; i <= 3; ++i) {
        const CoverThimble c{k, i};
        CHECK(inverse_serre_twist(n, serre_twist(n, c).thimble).thimble == c);
        CoverThimble x = c;
        for (int s = 0; s <= n; ++s) x = serre_twist(n, x).thimble;
        CHECK(x == CoverThimble{k, i - (n + 1)});
        CHECK(x.mirror_degree(n) == c.mirror_degree(n) - (n + 1) * (n + 1));
      }
}

TEST_CASE("psi commutes with the Serre twist") {
  for (int n = 1; n <= 4; ++n)
    for (long j = -10; j <= 10; ++j) {
      const auto up = psi_decompose(n, j + n + 1);
      const auto base = psi_decompose(n, j);
      REQUIRE(up.size() == base.size());
      for (std::size_t k = 0; k < up.size(); ++k) CHECK(serre_twist(n, up[k]).thimble == base[k]);
    }
}

TEST_CASE("hom dimensions on projective space") {
  CHECK(pn_hom_dim(2, 0, 1).dim == 3);
  CHECK(pn_hom_dim(2, 0, 0).dim == 1);
  const auto dual = pn_hom_dim(2, 0, -3);
  CHECK(dual.dim == 1);
  CHECK(dual.shift == 2);
  CHECK(pn_hom_dim(2, 0, -1).dim == 0);
}

TEST_CASE("exceptional collection dimensions") {
  CHECK(futaki_ueda_dim(5, 0, 1) == 6);
  CHECK(futaki_ueda_dim(3, 2, 2) == 1);
  CHECK(futaki_ueda_dim(2, 0, 2) == 3);
  CHECK(futaki_ueda_dim(3, 0, 3) == 4);
  CHECK(futaki_ueda_dim(2, 2, 0) == 0);
  CHECK_THROWS_AS(futaki_ueda_dim(2, 0, 3), std::invalid_argument);
  // Exterior powers of an (n+1)-dimensional space have alternating sum zero.
  for (int n = 1; n <= 6; ++n) {
    BigInt alternating = 0;
    for (int m = 0; m <= n + 1; ++m) alternating += (m % 2 ? -1 : 1) * binomial(n + 1, m);
    CHECK(alternating == 0);
    for (int m = 0; m <= n; ++m) CHECK(futaki_ueda_dim(n, 0, m) == binomial(n + 1, m));
  }
}

TEST_CASE("A side dimension examples") {
  const auto r = a_side_dim(2, 0, 1);
  CHECK(r.a_side == 4);
  CHECK(r.b_side == 4);
  CHECK(r.match);
  CHECK(r.blocks == std::vector<BigInt>{3, 1, 0});
  CHECK(a_side_dim(2, 0, 0).a_side == 1);
  const auto s = a_side_dim(3, -2, 0);
  CHECK(s.a_side == 15);
  CHECK(s.b_side == 15);
}

TEST_CASE("A and B sides match on the grid, with twist invariance") {
  for (int n = 1; n <= 4; ++n)
    for (long i = -6; i <= 6; ++i)
      for (long j = -6; j <= 6; ++j) {
        const auto r = a_side_dim(n, i, j);
        CAPTURE(n);
        CAPTURE(i);
        CAPTURE(j);
        CHECK(r.match);
        CHECK(a_side_dim(n, i + n + 1, j + n + 1).a_side == r.a_side);
        CHECK(a_side_dim(n, i + 1, j + 1).a_side == r.a_side);
      }
}

TEST_CASE("grading group normal form") {
  const GradingGroup g(3);
  const std::vector<long> ones{1, 1, 1, 1};
  CHECK(g.normalize(ones).v == std::vector<long>{0, 0, 0});
  for (long a = -2; a <= 2; ++a)
    for (long b = -2; b <= 2; ++b) {
      const std::vector<long> x{a, b, a - b, 3};
      const auto v = g.normalize(x);
      const auto lifted = g.lift(v);
      CHECK(g.normalize(lifted) == v);
      std::vector<long> shifted = x;
      for (auto& e : shifted) e += 5;
      CHECK(g.normalize(shifted) == v);
    }
  CHECK_THROWS_AS(g.generator(4), std::out_of_range);
  const std::vector<long> wrong{1, 2};
  CHECK_THROWS_AS(g.normalize(wrong), std::invalid_argument);
}

TEST_CASE("chord to monomial examples") {
  const GradingGroup g(2);
  CHECK(chord_to_monomial(2, g.generator(1), 1) == RingMonomial{2, 0, {0, 1, 0}});
  const std::vector<long> zero{0, 0, 0};
  CHECK(chord_to_monomial(2, zero, 1) == RingMonomial{2, 1, {0, 0, 0}});
  const std::vector<long> minus_e0{-1, 0, 0};
  CHECK_FALSE(chord_to_monomial(2, minus_e0, 1).has_value());
  CHECK(chord_to_monomial(2, minus_e0, 2) == RingMonomial{2, 0, {0, 1, 1}});
  CHECK_THROWS_AS(chord_to_monomial(2, zero, -1), std::invalid_argument);
}

TEST_CASE("chord dictionary is a bijection onto each graded basis") {
  for (int n = 1; n <= 4; ++n) {
    const GradingGroup g(n);
    for (long d = 0; d <= 8; ++d) {
      const auto basis = graded_basis(n, d);
      std::set<RingMonomial> hit;
      for (const auto& m : basis) {
        const auto back = chord_to_monomial(n, g.lift(toric_degree(m)), d);
        REQUIRE(back.has_value());
        CHECK(*back == m);
        hit.insert(*back);
      }
      CHECK(hit.size() == basis.size());
    }
  }
}
