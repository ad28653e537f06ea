// Times each OpenMP kernel against its serial reference and checks that
// both produce the same result.
#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>

#include "mirrorkit/clifford.hpp"
#include "mirrorkit/critical.hpp"
#include "mirrorkit/disc_numerics.hpp"
#include "mirrorkit/superpotential.hpp"

using namespace mirrorkit;

namespace {

double seconds(const std::function<void()>& f, int reps) {
  const auto t0 = std::chrono::steady_clock::now();
  for (int r = 0; r < reps; ++r) f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() / reps;
}

void row(const char* name, double serial, double parallel, bool same) {
  std::printf("%-24s serial %9.4f s  parallel %9.4f s  speedup %5.2fx  %s\n", name, serial, parallel,
              parallel > 0 ? serial / parallel : 0.0, same ? "identical" : "MISMATCH");
}

}  // namespace

int main() {
  std::printf("threads: %d\n", omp_get_max_threads());

  {
    const auto a = build_W_cl(5).pow(4);
    const auto b = build_W_cl(5).pow(3);
    LaurentPolynomial s(a.variables()), p(a.variables());
    const double ts = seconds([&] { s = mul_serial(a, b); }, 3);
    const double tp = seconds([&] { p = mul_parallel(a, b); }, 3);
    row("laurent multiply", ts, tp, s == p);
  }
  {
    SolverConfig cfg;
    cfg.starts = 64;
    CriticalReport s, p;
    const double ts = seconds([&] { s = critical_points_serial(4, cfg); }, 1);
    const double tp = seconds([&] { p = critical_points(4, cfg); }, 1);
    bool same = s.points.size() == p.points.size();
    for (std::size_t k = 0; same && k < s.points.size(); ++k) same = s.points[k].value_hat == p.points[k].value_hat;
    row("critical points n=4", ts, tp, same);
  }
  {
    RigidityReport s, p;
    const double ts = seconds([&] { s = spherical_rigidity_check_serial(3, 200, 0); }, 1);
    const double tp = seconds([&] { p = spherical_rigidity_check(3, 200, 0); }, 1);
    bool same = s.passed == p.passed;
    for (std::size_t k = 0; same && k < s.results.size(); ++k)
      same = s.results[k].final_centers == p.results[k].final_centers;
    row("rigidity n=3 x200", ts, tp, same);
  }
  {
    const auto cl = clifford_from_form(hessian_at_symmetric_point(5));
    bool s = false, p = false;
    const double ts = seconds([&] { s = cl.associative_serial(); }, 1);
    const double tp = seconds([&] { p = cl.associative(); }, 1);
    row("clifford assoc n=5", ts, tp, s == p);
  }
  return 0;
}
