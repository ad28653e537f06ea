#include <doctest.h>

#include <cmath>
#include <numbers>

#include "mirrorkit/disc_numerics.hpp"
#include "mirrorkit/rng.hpp"

using namespace mirrorkit;

namespace {

BlaschkeProduct random_blaschke(Rng& rng, std::size_t degree) {
  std::vector<Complex> centers;
  for (std::size_t k = 0; k < degree; ++k) centers.push_back(rng.in_disc(0.9));
  return BlaschkeProduct(std::polar(1.0, rng.uniform(0.0, 2 * std::numbers::pi)), std::move(centers));
}

// Derivatives at 0 by central differences of Taylor coefficients: the
// contour integral over |z| = r with the trapezoid rule.
std::vector<Complex> contour_derivatives(const BlaschkeProduct& b, std::size_t order) {
  const int samples = 400;
  const double r = 0.4;
  std::vector<Complex> out(order + 1, 0.0);
  for (int s = 0; s < samples; ++s) {
    const double th = 2 * std::numbers::pi * s / samples;
    const Complex v = b(std::polar(r, th));
    for (std::size_t k = 0; k <= order; ++k) out[k] += v * std::polar(1.0, -double(k) * th);
  }
  double fact = 1;
  for (std::size_t k = 0; k <= order; ++k) {
    if (k) fact *= double(k);
    out[k] *= fact / (samples * std::pow(r, double(k)));
  }
  return out;
}

}  // namespace

TEST_CASE("Blaschke construction validates its data") {
  CHECK_THROWS_AS(BlaschkeProduct(2.0, {}), std::invalid_argument);
  CHECK_THROWS_AS(BlaschkeProduct(1.0, {Complex(1.0, 0.0)}), std::invalid_argument);
  CHECK_NOTHROW(BlaschkeProduct(Complex(0.6, 0.8), {Complex(0.3, -0.4)}));
  const BlaschkeProduct b(1.0, {0.5});
  CHECK_THROWS_AS(b(Complex(2.0, 0.0)), std::invalid_argument);
}

TEST_CASE("Blaschke evaluation examples") {
  const BlaschkeProduct constant(1.0, {});
  CHECK(constant(Complex(0.3, 0.2)) == Complex(1.0));
  const BlaschkeProduct cube(1.0, {0.0, 0.0, 0.0});
  const Complex z(0.3, -0.5);
  CHECK(std::abs(cube(z) - z * z * z) < 1e-15);
  CHECK(std::abs(blaschke_eval(cube, z) - z * z * z) < 1e-15);
}

TEST_CASE("boundary maps to boundary") {
  Rng rng(derive_seed(0, 1));
  for (int s = 0; s < 1000; ++s) {
    const auto b = random_blaschke(rng, 1 + static_cast<std::size_t>(s % 5));
    const Complex z = std::polar(1.0, rng.uniform(0.0, 2 * std::numbers::pi));
    CHECK(std::abs(std::abs(b(z)) - 1.0) <= 1e-10);
  }
}

TEST_CASE("degree is additive under products") {
  Rng rng(derive_seed(0, 2));
  for (int s = 0; s < 30; ++s) {
    const auto a = random_blaschke(rng, 1 + static_cast<std::size_t>(s % 3));
    const auto b = random_blaschke(rng, 1 + static_cast<std::size_t>(s % 4));
    CHECK(boundary_winding(a) == static_cast<long>(a.degree()));
    CHECK(boundary_winding(a * b) == static_cast<long>(a.degree() + b.degree()));
    const Complex z(0.2, 0.1);
    CHECK(std::abs((a * b)(z) - a(z) * b(z)) < 1e-14);
  }
}

TEST_CASE("jets") {
  const BlaschkeProduct power(1.0, {0.0, 0.0, 0.0});
  for (const auto& c : blaschke_jet(power, 2).entries) CHECK(c == Complex(0.0));
  CHECK(std::abs(blaschke_jet(power, 3).entries[3] - 6.0) < 1e-14);
  const Complex a(0.3, -0.2);
  const auto j0 = blaschke_jet(BlaschkeProduct(1.0, {a}), 0).entries;
  REQUIRE(j0.size() == 1);
  CHECK(std::abs(j0[0] + a) < 1e-15);
}

TEST_CASE("series jets agree with contour integrals") {
  Rng rng(derive_seed(0, 3));
  for (int s = 0; s < 20; ++s) {
    const auto b = random_blaschke(rng, 1 + static_cast<std::size_t>(s % 4));
    const auto jet = blaschke_jet(b, 4).entries;
    const auto oracle = contour_derivatives(b, 4);
    for (std::size_t k = 0; k < jet.size(); ++k)
      CHECK(std::abs(jet[k] - oracle[k]) <= 1e-6 * std::max(1.0, std::abs(oracle[k])));
  }
}

TEST_CASE("normalized product is z^d at lambda = 0 and fixes 1") {
  for (std::size_t d = 1; d <= 5; ++d) {
    const std::vector<Complex> zero(d, 0.0);
    const auto jet = jet_map(zero);
    REQUIRE(jet.size() == d);
    for (const auto& c : jet) CHECK(c == Complex(0.0));
  }
  Rng rng(derive_seed(0, 4));
  for (int s = 0; s < 10; ++s) {
    std::vector<Complex> centers{rng.in_disc(0.5), rng.in_disc(0.5), rng.in_disc(0.5)};
    const auto lambda = elementary_symmetric(centers);
    // Compare with the explicit Blaschke product rotated so that v(1) = 1.
    const BlaschkeProduct raw(1.0, centers);
    const BlaschkeProduct normalized(1.0 / raw(1.0), centers);
    const auto series = normalized_product_series(lambda, 4).coefficients();
    const auto expected = normalized.series(4).coefficients();
    for (std::size_t k = 0; k <= 4; ++k) CHECK(std::abs(series[k] - expected[k]) < 1e-12);
  }
}

TEST_CASE("elementary symmetric functions and root recovery") {
  const std::vector<Complex> centers{Complex(0.1, 0.2), Complex(-0.3, 0.0), Complex(0.0, 0.5)};
  const auto lambda = elementary_symmetric(centers);
  CHECK(std::abs(lambda[0] - (centers[0] + centers[1] + centers[2])) < 1e-15);
  CHECK(std::abs(lambda[2] - centers[0] * centers[1] * centers[2]) < 1e-15);
  auto roots = centers_from_symmetric(lambda);
  for (const auto& c : centers) {
    double best = 1;
    for (const auto& r : roots) best = std::min(best, std::abs(r - c));
    CHECK(best < 1e-12);
  }
  // Tiny symmetric functions still give tiny roots: no eps^(1/d) blow-up.
  const std::vector<Complex> tiny{1e-150, 0.0, 1e-200};
  for (const auto& r : centers_from_symmetric(tiny)) CHECK(std::abs(r) < 1e-60);
  for (const auto& r : centers_from_symmetric(std::vector<Complex>(3, 0.0))) CHECK(r == Complex(0.0));
}

TEST_CASE("jet Jacobian at zero is a signed permutation") {
  for (int d = 1; d <= 5; ++d) {
    CAPTURE(d);
    const auto r = jet_jacobian_at_zero(d);
    CHECK(r.antiholomorphic_vanishes);
    CHECK(r.max_antiholomorphic <= 1e-6);
    CHECK(r.signed_permutation);
    CHECK(r.regular);
    CHECK(std::abs(std::abs(r.determinant) - 1.0) < 1e-6);
    for (int i = 1; i <= d; ++i) {
      CHECK(r.slot[static_cast<std::size_t>(i - 1)] == d - i);
      CHECK(r.sign[static_cast<std::size_t>(i - 1)] == (i % 2 ? -1 : 1));
      // Raw derivative slot carries the factorial.
      const double fact = std::tgamma(double(d - i) + 1.0);
      CHECK(std::abs(r.holomorphic[static_cast<std::size_t>(d - i)][static_cast<std::size_t>(i - 1)] -
                     Complex((i % 2 ? -1.0 : 1.0) * fact)) < 1e-6);
    }
  }
  CHECK_THROWS_AS(jet_jacobian_at_zero(0), std::invalid_argument);
}

TEST_CASE("a failing Richardson step is a numerical error") {
  FiniteDifferenceConfig cfg;
  cfg.step = 0.3;
  cfg.max_richardson = 1e-14;
  CHECK_THROWS_AS(jet_jacobian_at_zero(3, cfg), NumericalError);
}

TEST_CASE("spherical rigidity") {
  for (int n = 1; n <= 3; ++n) {
    const auto r = spherical_rigidity_check(n, 100, 0);
    CHECK(r.all_pass());
    for (const auto& t : r.results) {
      CHECK(t.converged);
      CHECK(t.max_center_modulus <= 1e-8);
    }
  }
}

TEST_CASE("rigidity trials are reproducible and scheduling independent") {
  const auto a = spherical_rigidity_check(2, 25, 99);
  const auto b = spherical_rigidity_check_serial(2, 25, 99);
  REQUIRE(a.results.size() == b.results.size());
  for (std::size_t t = 0; t < a.results.size(); ++t) {
    CHECK(a.results[t].seed == b.results[t].seed);
    CHECK(a.results[t].start_centers == b.results[t].start_centers);
    CHECK(a.results[t].final_centers == b.results[t].final_centers);
    CHECK(a.results[t].iterations == b.results[t].iterations);
  }
  CHECK_THROWS_AS(spherical_rigidity_check(0, 1, 0), std::invalid_argument);
}

TEST_CASE("branch degree") {
  const auto sextic = branch_degree({2, 1, 3});
  CHECK(sextic.degree == 6);
  CHECK(sextic.integral);
  CHECK(sextic.divisible_by_n_plus_1);
  const auto half = branch_degree({2, 2, 3});
  CHECK(half.degree == Rational(15, 2));
  CHECK_FALSE(half.integral);
  for (int n = 1; n <= 8; ++n) {
    const auto b = branch_degree({n, 1, n + 1});
    CHECK(b.degree == n * (n + 1));
    CHECK(b.divisible_by_n_plus_1);
  }
  CHECK_THROWS_AS(branch_degree({2, 0, 3}), std::invalid_argument);
}

TEST_CASE("Maslov index in the cover") {
  CHECK(maslov_in_cover(3, 2, Rational(7), Rational(8), Rational(0)) == 8);
  for (int n = 1; n <= 6; ++n) {
    const Rational deg_b(n * (n + 1));
    CHECK(maslov_in_cover(n, 1, deg_b, Rational(2 * (n + 1)), deg_b) == 2);
  }
  // Weakly monotone case: mu = 2(n+1) vB / deg_B leaves 2 vB / (m deg_B).
  for (int n = 1; n <= 4; ++n)
    for (long m = 1; m <= 4; ++m)
      for (long v = 0; v <= 5; ++v) {
        const Rational db = branch_degree({n, m, 2 * n}).degree;
        const Rational mu = Rational(2 * (n + 1) * v) / db;
        CHECK(maslov_in_cover(n, m, db, mu, v) == Rational(2 * v) / (Rational(m) * db));
      }
  CHECK_THROWS_AS(maslov_in_cover(2, 1, Rational(0), Rational(1), Rational(1)), std::invalid_argument);
}

TEST_CASE("assembly counts are multinomials") {
  for (int n = 1; n <= 4; ++n)
    for_each_composition(n + 1, static_cast<std::size_t>(n + 1), [&](const std::vector<long>& alpha) {
      CHECK(assembly_count(alpha) == multinomial(n + 1, alpha));
    });
  const std::vector<long> bad{-1, 2};
  CHECK_THROWS_AS(assembly_count(bad), std::invalid_argument);
}
