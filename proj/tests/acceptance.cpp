// Runs the twelve acceptance criteria and prints one PASS/FAIL line each.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <string>

#include "mirrorkit/clifford.hpp"
#include "mirrorkit/coord_ring.hpp"
#include "mirrorkit/critical.hpp"
#include "mirrorkit/disc_numerics.hpp"
#include "mirrorkit/fs_combinatorics.hpp"
#include "mirrorkit/report.hpp"
#include "mirrorkit/superpotential.hpp"

using namespace mirrorkit;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;
};

int failures = 0;

BigInt power(long base, unsigned long exp) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), exp);
  return r;
}

void criterion(int id, const char* name, double budget_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool in_time = secs < budget_s;
  const bool pass = out.ok && in_time;
  if (!pass) ++failures;
  std::printf("%s criterion %2d %-32s %7.3f s (budget %g s)%s%s\n", pass ? "PASS" : "FAIL", id, name, secs, budget_s,
              out.note.empty() ? "" : "  ", out.note.c_str());
  if (!in_time) std::printf("     over time budget\n");
  std::fflush(stdout);
}

}  // namespace

int main() {
  criterion(1, "pullback identity", 5, [] {
    Outcome o;
    for (int n = 1; n <= 4; ++n) {
      const bool eq = covering_pullback(n) == build_W_cl(n).pow(static_cast<unsigned>(n + 1));
      const bool shift = build_W_hat(n) == build_W(n) + LaurentPolynomial::constant(y_variables(n), factorial(static_cast<unsigned>(n + 1)));
      if (!eq || !shift) o = {false, "n=" + std::to_string(n)};
    }
    return o;
  });

  criterion(2, "disc count identity", 10, [] {
    Outcome o;
    for (int n = 1; n <= 5; ++n) {
      const auto id = verify_count_identity(n);
      const auto table = disc_counts(n);
      const DiscClass spherical{std::vector<long>(static_cast<std::size_t>(n + 1), 1)};
      const auto it = table.rows.find(spherical);
      const bool sph_zero = it == table.rows.end() || it->second == 0;
      if (!id.holds || !id.residual.is_zero() || !sph_zero) o = {false, "n=" + std::to_string(n)};
    }
    return o;
  });

  criterion(3, "critical values", 30, [] {
    Outcome o;
    for (int n = 1; n <= 6; ++n) {
      SolverConfig sc;
      sc.cluster_radius = 1e-8;
      const auto cr = critical_points(n, sc);
      const double big = cr.expected_small.get_d();
      std::set<int> seen;
      bool ok = cr.symmetric_value == power(n + 1, static_cast<unsigned long>(n + 1));
      for (const auto& p : cr.points) {
        if (std::abs(p.value_hat) <= 1e-8)
          seen.insert(0);
        else if (std::abs(p.value_hat - std::complex<double>(big, 0)) <= 1e-8)
          seen.insert(1);
        else
          ok = false;
      }
      if (!ok || seen.size() != 2) o = {false, "n=" + std::to_string(n)};
    }
    return o;
  });

  criterion(4, "Hessian and Clifford table", 10, [] {
    Outcome o;
    for (int n = 1; n <= 5; ++n) {
      const auto h = hessian_at_symmetric_point(n);
      const auto cl = clifford_from_form(h);
      const Rational expected_det = power(n + 1, static_cast<unsigned long>(n * (n + 1) - 1));
      if (h.determinant() != expected_det || !cl.nondegenerate() || !cl.anticommutators_hold() || !cl.associative())
        o = {false, "n=" + std::to_string(n)};
    }
    return o;
  });

  criterion(5, "HMS dimension match", 10, [] {
    Outcome o;
    for (int n = 2; n <= 4; ++n)
      for (long i = -6; i <= 6; ++i)
        for (long j = -6; j <= 6; ++j) {
          const auto r = a_side_dim(n, i, j);
          if (!r.match || r.a_side != r.b_side) o = {false, "mismatch"};
        }
    const auto spot = a_side_dim(2, 0, 1);
    if (spot.a_side != 4 || spot.b_side != 4) o = {false, "spot value n=2 (0,1)"};
    return o;
  });

  criterion(6, "psi decomposition", 1, [] {
    Outcome o;
    for (int n = 1; n <= 6; ++n)
      for (long j = -20; j <= 20; ++j) {
        std::multiset<long> got, expected;
        for (const auto& t : psi_decompose(n, j)) got.insert(t.mirror_degree(n));
        for (long k = 0; k <= n; ++k) expected.insert(j - k);
        if (got != expected) o = {false, "n=" + std::to_string(n) + " j=" + std::to_string(j)};
      }
    return o;
  });

  criterion(7, "toric tags and chord dictionary", 10, [] {
    Outcome o;
    for (int n = 1; n <= 4; ++n) {
      const GradingGroup g(n);
      for (long d = 0; d <= 8; ++d) {
        const auto basis = graded_basis(n, d);
        std::set<ToricDegree> tags;
        std::set<RingMonomial> hit;
        for (const auto& m : basis) {
          if (!tags.insert(toric_degree(m)).second) o = {false, "tag collision"};
          const auto back = chord_to_monomial(n, g.lift(toric_degree(m)), d);
          if (!back || *back != m) o = {false, "dictionary"};
          if (back) hit.insert(*back);
        }
        if (hit.size() != basis.size() || BigInt(static_cast<unsigned long>(basis.size())) != graded_dim(n, d))
          o = {false, "not a bijection"};
      }
    }
    return o;
  });

  criterion(8, "pushforward algebra", 5, [] {
    Outcome o;
    for (int n = 1; n <= 3; ++n) {
      const auto f = product_polynomial(n);
      BlockMap acc = pushforward_of_t(n, f, 0);
      for (long s = 1; s <= n; ++s) acc = compose(pushforward_of_t(n, f, s), acc);
      if (!(acc == BlockMap::diagonal(n, 0, f, n + 1))) o = {false, "n=" + std::to_string(n)};
    }
    return o;
  });

  criterion(9, "jet map regularity", 10, [] {
    Outcome o;
    double worst = 0;
    for (int d = 1; d <= 5; ++d) {
      const auto r = jet_jacobian_at_zero(d);
      worst = std::max(worst, r.max_antiholomorphic);
      if (!r.antiholomorphic_vanishes || r.max_antiholomorphic > 1e-6 || !r.signed_permutation || !r.regular)
        o = {false, "d=" + std::to_string(d)};
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "max antiholomorphic %.1e", worst);
    if (o.ok) o.note = buf;
    return o;
  });

  criterion(10, "spherical rigidity", 30, [] {
    Outcome o;
    int total = 0;
    for (int n = 1; n <= 3; ++n) {
      const auto r = spherical_rigidity_check(n, 100, 0, 1e-8);
      total += r.passed;
      if (!r.all_pass() || r.results.size() != 100) o = {false, "n=" + std::to_string(n)};
    }
    if (o.ok) o.note = std::to_string(total) + "/300 trials";
    return o;
  });

  criterion(11, "branch degree", 1, [] {
    Outcome o;
    // The sextic over a cubic surface: n = 2, anticanonical class very ample (m = 1), deg X = 3.
    const auto sextic = branch_degree({2, 1, 3});
    if (sextic.degree != 6) o = {false, "cubic surface"};
    for (int n = 1; n <= 12; ++n)
      if (!branch_degree({n, 1, n + 1}).divisible_by_n_plus_1) o = {false, "n=" + std::to_string(n)};
    const auto alt = branch_degree({2, 2, 3});
    if (o.ok) o.note = "(2,1,3) -> 6; (2,2,3) -> " + alt.degree.get_str();
    return o;
  });

  criterion(12, "determinism", 60, [] {
    RunConfig c;
    c.timestamp = false;
    const auto a = run_full_suite(c).to_json().dump(2);
    const auto b = run_full_suite(c).to_json().dump(2);
    return Outcome{a == b, std::to_string(a.size()) + " bytes"};
  });

  std::printf("%s: %d of 12 criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
