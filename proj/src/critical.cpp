#include "mirrorkit/critical.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "mirrorkit/rng.hpp"
#include "mirrorkit/superpotential.hpp"

namespace mirrorkit {

GradientSystem::GradientSystem(const LaurentPolynomial& p)
    : n_(static_cast<int>(p.arity())),
      lowest_(p.arity(), 0),
      highest_(p.arity(), 0) {
  for (const auto& [e, c] : p.terms()) {
    Term t;
    t.coefficient = static_cast<long double>(c.get_d());
    for (std::size_t i = 0; i < e.size(); ++i) {
      const int v = static_cast<int>(e[i]);
      t.exponent.push_back(v);
      lowest_[i] = std::min(lowest_[i], v);
      highest_[i] = std::max(highest_[i], v);
    }
    terms_.push_back(std::move(t));
  }
}

GradientSystem::Jet GradientSystem::evaluate(std::span<const ComplexLD> y, bool with_hessian) const {
  const auto n = static_cast<std::size_t>(n_);
  if (y.size() != n) throw std::invalid_argument("point dimension mismatch");

  // powers[i][e - lowest_i] = y_i^e
  std::vector<std::vector<ComplexLD>> powers(n);
  std::vector<ComplexLD> inverse(n);
  for (std::size_t i = 0; i < n; ++i) {
    inverse[i] = ComplexLD(1) / y[i];
    auto& row = powers[i];
    row.resize(static_cast<std::size_t>(highest_[i] - lowest_[i] + 1));
    ComplexLD p = 1;
    for (int e = 0; e <= highest_[i]; ++e, p *= y[i]) row[static_cast<std::size_t>(e - lowest_[i])] = p;
    p = inverse[i];
    for (int e = -1; e >= lowest_[i]; --e, p *= inverse[i]) row[static_cast<std::size_t>(e - lowest_[i])] = p;
  }

  Jet jet{0, std::vector<ComplexLD>(n, 0), {}};
  if (with_hessian) jet.hessian.assign(n * n, 0);
  std::vector<ComplexLD> scaled(n);
  for (const auto& t : terms_) {
    ComplexLD m = t.coefficient;
    for (std::size_t i = 0; i < n; ++i) m *= powers[i][static_cast<std::size_t>(t.exponent[i] - lowest_[i])];
    jet.value += m;
    for (std::size_t i = 0; i < n; ++i) {
      scaled[i] = m * inverse[i];
      jet.gradient[i] += static_cast<long double>(t.exponent[i]) * scaled[i];
    }
    if (!with_hessian) continue;
    for (std::size_t i = 0; i < n; ++i) {
      if (t.exponent[i] == 0) continue;
      for (std::size_t j = i; j < n; ++j) {
        const long double vj = static_cast<long double>(t.exponent[j] - (i == j ? 1 : 0));
        if (vj == 0) continue;
        jet.hessian[i * n + j] += static_cast<long double>(t.exponent[i]) * vj * scaled[i] * inverse[j];
      }
    }
  }
  if (with_hessian)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < i; ++j) jet.hessian[i * n + j] = jet.hessian[j * n + i];
  return jet;
}

const char* to_string(StartKind kind) {
  switch (kind) {
    case StartKind::symmetric: return "symmetric";
    case StartKind::hyperplane: return "hyperplane";
    case StartKind::random: return "random";
  }
  return "unknown";
}

namespace {

constexpr long double kMinModulus = 1e-8L;
constexpr long double kMaxModulus = 1e8L;

long double norm2(const std::vector<ComplexLD>& v) {
  long double s = 0;
  for (const auto& x : v) s += std::norm(x);
  return std::sqrt(s);
}

// y_i dW/dy_i: the gradient in logarithmic coordinates.  Along the degenerate
// critical locus it stays proportional to the value even where the plain
// gradient is tiny because the coordinates are large.
long double log_gradient_norm(std::span<const ComplexLD> y, const std::vector<ComplexLD>& g) {
  long double s = 0;
  for (std::size_t i = 0; i < g.size(); ++i) s += std::norm(y[i] * g[i]);
  return std::sqrt(s);
}

bool inside_torus(std::span<const ComplexLD> y) {
  for (const auto& v : y) {
    const long double r = std::abs(v);
    if (!std::isfinite(r) || r < kMinModulus || r > kMaxModulus) return false;
  }
  return true;
}

std::vector<ComplexLD> start_point(int n, StartKind kind, Rng& rng) {
  const auto dim = static_cast<std::size_t>(n);
  std::vector<ComplexLD> y(dim, ComplexLD(1));
  switch (kind) {
    case StartKind::symmetric:
      break;
    case StartKind::hyperplane: {
      // Perturbed roots of unity zeta^1..zeta^(n-1), closed up so that 1 + sum y = 0.
      const long double step = 2.0L * std::numbers::pi_v<long double> / static_cast<long double>(n + 1);
      for (int attempt = 0;; ++attempt) {
        ComplexLD sum = 1;
        for (std::size_t k = 0; k + 1 < dim; ++k) {
          const long double jitter = attempt < 64 ? rng.uniform(-0.3, 0.3) : 0.0L;
          y[k] = std::polar(1.0L, step * static_cast<long double>(k + 1) + jitter);
          sum += y[k];
        }
        y[dim - 1] = -sum;
        if (std::abs(y[dim - 1]) > 0.2L) break;
      }
      break;
    }
    case StartKind::random:
      for (auto& v : y) v = std::polar(std::exp(static_cast<long double>(rng.uniform(-1.0, 1.0))),
                                       static_cast<long double>(rng.uniform(0.0, 2.0 * std::numbers::pi)));
      break;
  }
  return y;
}

std::vector<std::complex<double>> to_double(const std::vector<ComplexLD>& v) {
  std::vector<std::complex<double>> out;
  for (const auto& x : v) out.emplace_back(static_cast<double>(x.real()), static_cast<double>(x.imag()));
  return out;
}

Eigen::MatrixXcd hessian_matrix(const GradientSystem::Jet& jet, int n) {
  Eigen::MatrixXcd h(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const auto& v = jet.hessian[static_cast<std::size_t>(i * n + j)];
      h(i, j) = std::complex<double>(static_cast<double>(v.real()), static_cast<double>(v.imag()));
    }
  return h;
}

StartOutcome run_start(const GradientSystem& system, int n, int index, StartKind kind, const SolverConfig& cfg) {
  Rng rng(derive_seed(cfg.seed, static_cast<std::uint64_t>(index)));
  std::vector<ComplexLD> y = start_point(n, kind, rng);

  StartOutcome out;
  out.index = index;
  out.kind = kind;

  for (int it = 0;; ++it) {
    const auto jet = system.evaluate(y, true);
    const long double gn = norm2(jet.gradient);
    const long double merit = gn + log_gradient_norm(y, jet.gradient);
    out.iterations = it;
    out.gradient_norm = static_cast<double>(gn);
    out.point = to_double(y);
    out.value = {static_cast<double>(jet.value.real()), static_cast<double>(jet.value.imag())};
    if (gn < cfg.newton_tol && log_gradient_norm(y, jet.gradient) < cfg.newton_tol) {
      out.converged = true;
      return out;
    }
    if (it >= cfg.max_iterations) {
      out.note = "iteration limit";
      return out;
    }

    // Minimum-norm Newton step; the Hessian is rank deficient near the
    // degenerate locus, where the rank-revealing threshold keeps steps sane.
    Eigen::VectorXcd g(n);
    for (int i = 0; i < n; ++i) {
      const auto& v = jet.gradient[static_cast<std::size_t>(i)];
      g(i) = std::complex<double>(static_cast<double>(v.real()), static_cast<double>(v.imag()));
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(hessian_matrix(jet, n), Eigen::ComputeThinU | Eigen::ComputeThinV);
    svd.setThreshold(1e-9);
    const Eigen::VectorXcd step = svd.solve(-g);

    bool accepted = false;
    long double t = 1;
    for (int halving = 0; halving < 40 && !accepted; ++halving, t *= 0.5L) {
      std::vector<ComplexLD> trial = y;
      for (int i = 0; i < n; ++i)
        trial[static_cast<std::size_t>(i)] +=
            t * ComplexLD(step(i).real(), step(i).imag());
      if (!inside_torus(trial)) continue;
      const auto g = system.evaluate(trial, false).gradient;
      if (norm2(g) + log_gradient_norm(trial, g) < merit) {
        y = std::move(trial);
        accepted = true;
      }
    }
    if (!accepted) {
      out.note = "line search stalled";
      return out;
    }
  }
}

struct StartPlan {
  int index;
  StartKind kind;
};

std::vector<StartPlan> plan_starts(const SolverConfig& cfg) {
  if (cfg.starts < 0 || cfg.hyperplane_samples < 0) throw std::invalid_argument("start counts must be nonnegative");
  if (!(cfg.newton_tol > 0) || !(cfg.cluster_radius > 0)) throw std::invalid_argument("tolerances must be positive");
  std::vector<StartPlan> plan;
  int index = 0;
  plan.push_back({index++, StartKind::symmetric});
  for (int s = 0; s < cfg.hyperplane_samples; ++s) plan.push_back({index++, StartKind::hyperplane});
  for (int s = 0; s < cfg.starts; ++s) plan.push_back({index++, StartKind::random});
  return plan;
}

CriticalReport assemble(int n, const SolverConfig& cfg, const GradientSystem& system, std::vector<StartOutcome> outcomes) {
  CriticalReport report;
  report.n = n;
  report.config = cfg;
  const unsigned long top = static_cast<unsigned long>(n + 1);
  BigInt small;
  mpz_ui_pow_ui(small.get_mpz_t(), top, top);
  report.expected_small = Rational(small);
  report.symmetric_value = build_W_hat(n).evaluate(std::vector<Rational>(static_cast<std::size_t>(n), Rational(1)));
  const double shift = factorial(static_cast<unsigned>(n + 1)).get_d();

  for (const auto& o : outcomes) {
    if (!o.converged) {
      ++report.diverged;
      continue;
    }
    ++report.converged;
    auto hit = std::find_if(report.points.begin(), report.points.end(), [&](const CriticalPoint& p) {
      return std::abs(p.value_hat - o.value) <= cfg.cluster_radius;
    });
    if (hit != report.points.end()) {
      ++hit->hits;
      continue;
    }
    CriticalPoint p;
    p.coords = o.point;
    p.value_hat = o.value;
    p.value_w = o.value - shift;
    p.gradient_norm = o.gradient_norm;
    p.hits = 1;
    p.found_by = o.kind;
    report.points.push_back(std::move(p));
  }

  for (auto& p : report.points) {
    std::vector<ComplexLD> y;
    for (const auto& c : p.coords) y.emplace_back(c.real(), c.imag());
    const auto jet = system.evaluate(y, true);
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> eig(hessian_matrix(jet, n), false);
    for (int i = 0; i < n; ++i) p.hessian_eigen_abs.push_back(std::abs(eig.eigenvalues()(i)));
    std::sort(p.hessian_eigen_abs.begin(), p.hessian_eigen_abs.end());
  }
  std::stable_sort(report.points.begin(), report.points.end(), [](const CriticalPoint& a, const CriticalPoint& b) {
    if (a.value_hat.real() != b.value_hat.real()) return a.value_hat.real() < b.value_hat.real();
    return a.value_hat.imag() < b.value_hat.imag();
  });
  report.starts = std::move(outcomes);
  return report;
}

}  // namespace

CriticalReport critical_points(int n, const SolverConfig& config) {
  const GradientSystem system(build_W_hat(n));
  const auto plan = plan_starts(config);
  std::vector<StartOutcome> outcomes(plan.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t s = 0; s < static_cast<std::ptrdiff_t>(plan.size()); ++s) {
    const auto& p = plan[static_cast<std::size_t>(s)];
    outcomes[static_cast<std::size_t>(s)] = run_start(system, n, p.index, p.kind, config);
  }
  return assemble(n, config, system, std::move(outcomes));
}

CriticalReport critical_points_serial(int n, const SolverConfig& config) {
  const GradientSystem system(build_W_hat(n));
  std::vector<StartOutcome> outcomes;
  for (const auto& p : plan_starts(config)) outcomes.push_back(run_start(system, n, p.index, p.kind, config));
  return assemble(n, config, system, std::move(outcomes));
}

}  // namespace mirrorkit
