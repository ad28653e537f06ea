#include "mirrorkit/disc_numerics.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "mirrorkit/rng.hpp"

namespace mirrorkit {

BlaschkeProduct::BlaschkeProduct(Complex xi, std::vector<Complex> centers) : xi_(xi), centers_(std::move(centers)) {
  if (std::abs(std::abs(xi_) - 1.0) > 1e-12) throw std::invalid_argument("Blaschke scalar must have modulus 1");
  for (const auto& a : centers_)
    if (!(std::abs(a) < 1.0)) throw std::invalid_argument("Blaschke centers must lie in the open unit disc");
}

Complex BlaschkeProduct::operator()(Complex z) const {
  if (std::abs(z) > 1.0 + 1e-12) throw std::invalid_argument("Blaschke product evaluated outside the closed disc");
  Complex v = xi_;
  for (const auto& a : centers_) v *= (z - a) / (1.0 - std::conj(a) * z);
  return v;
}

Series BlaschkeProduct::series(std::size_t order) const {
  Series s = Series::constant(order, xi_);
  for (const auto& a : centers_) {
    Series numerator = Series::monomial(order, 1) - Series::constant(order, a);
    // 1 / (1 - conj(a) z) = sum_k conj(a)^k z^k
    Series geometric(order);
    Complex p = 1.0;
    for (std::size_t k = 0; k <= order; ++k, p *= std::conj(a)) geometric[k] = p;
    s = s * numerator * geometric;
  }
  return s;
}

BlaschkeProduct operator*(const BlaschkeProduct& a, const BlaschkeProduct& b) {
  std::vector<Complex> centers = a.centers_;
  centers.insert(centers.end(), b.centers_.begin(), b.centers_.end());
  return BlaschkeProduct(a.xi_ * b.xi_, std::move(centers));
}

Complex blaschke_eval(const BlaschkeProduct& b, Complex z) { return b(z); }

JetVector blaschke_jet(const BlaschkeProduct& b, std::size_t order) { return {b.series(order).derivatives()}; }

long boundary_winding(const BlaschkeProduct& b, int samples) {
  if (samples < 8) throw std::invalid_argument("too few boundary samples");
  double total = 0.0;
  Complex prev = b(1.0);
  for (int k = 1; k <= samples; ++k) {
    const Complex next = b(std::polar(1.0, 2.0 * std::numbers::pi * k / samples));
    total += std::arg(next / prev);
    prev = next;
  }
  return std::lround(total / (2.0 * std::numbers::pi));
}

namespace {

// P(lambda, z) = sum_{i=0}^d (-1)^i lambda_i z^(d-i), lambda_0 = 1.
Series p_series(std::span<const Complex> lambda, std::size_t order) {
  const std::size_t d = lambda.size();
  Series p(order);
  for (std::size_t i = 0; i <= d; ++i) {
    const Complex li = i == 0 ? Complex(1.0) : lambda[i - 1];
    if (d - i <= order) p[d - i] += (i % 2 ? -1.0 : 1.0) * li;
  }
  return p;
}

// R(conj(lambda), z) = sum_{i=0}^d (-1)^i conj(lambda_i) z^i.
Series r_series(std::span<const Complex> lambda, std::size_t order) {
  Series r(order);
  for (std::size_t i = 0; i <= lambda.size() && i <= order; ++i) {
    const Complex li = i == 0 ? Complex(1.0) : std::conj(lambda[i - 1]);
    r[i] += (i % 2 ? -1.0 : 1.0) * li;
  }
  return r;
}

Complex p_at_one(std::span<const Complex> lambda) {
  Complex v = 1.0;
  for (std::size_t i = 1; i <= lambda.size(); ++i) v += (i % 2 ? -1.0 : 1.0) * lambda[i - 1];
  return v;
}

double factorial_d(std::size_t k) {
  double f = 1.0;
  for (std::size_t i = 2; i <= k; ++i) f *= static_cast<double>(i);
  return f;
}

}  // namespace

Series normalized_product_series(std::span<const Complex> lambda, std::size_t order) {
  const Complex prefactor = std::conj(p_at_one(lambda)) / p_at_one(lambda);
  return p_series(lambda, order) * r_series(lambda, order).inverse() * prefactor;
}

std::vector<Complex> jet_map(std::span<const Complex> lambda) {
  if (lambda.empty()) throw std::invalid_argument("jet map needs d >= 1");
  return normalized_product_series(lambda, lambda.size() - 1).derivatives();
}

JacobianReport jet_jacobian_at_zero(int d, const FiniteDifferenceConfig& config) {
  if (d < 1) throw std::invalid_argument("jet Jacobian needs d >= 1");
  const auto du = static_cast<std::size_t>(d);
  const double h1 = config.step;
  const double h2 = config.step / 2.0;

  auto central = [&](std::size_t var, Complex direction, double h) {
    std::vector<Complex> plus(du, 0.0), minus(du, 0.0);
    plus[var] = h * direction;
    minus[var] = -h * direction;
    const auto jp = jet_map(plus);
    const auto jm = jet_map(minus);
    std::vector<Complex> out(du);
    for (std::size_t m = 0; m < du; ++m) out[m] = (jp[m] - jm[m]) / (2.0 * h);
    return out;
  };

  JacobianReport rep;
  rep.d = d;
  rep.holomorphic.assign(du, std::vector<Complex>(du));
  rep.antiholomorphic.assign(du, std::vector<Complex>(du));
  rep.coefficient_holomorphic.assign(du, std::vector<Complex>(du));

  for (std::size_t i = 0; i < du; ++i) {
    std::vector<Complex> dx(du), dy(du);
    for (int axis = 0; axis < 2; ++axis) {
      const Complex dir = axis == 0 ? Complex(1.0, 0.0) : Complex(0.0, 1.0);
      const auto coarse = central(i, dir, h1);
      const auto fine = central(i, dir, h2);
      for (std::size_t m = 0; m < du; ++m) {
        const Complex extrapolated = (4.0 * fine[m] - coarse[m]) / 3.0;
        rep.richardson_error = std::max(rep.richardson_error, std::abs(extrapolated - fine[m]));
        (axis == 0 ? dx : dy)[m] = extrapolated;
      }
    }
    for (std::size_t m = 0; m < du; ++m) {
      // Wirtinger: d/dl = (d/dx - i d/dy) / 2, d/dl-bar = (d/dx + i d/dy) / 2.
      rep.holomorphic[m][i] = 0.5 * (dx[m] - Complex(0, 1) * dy[m]);
      rep.antiholomorphic[m][i] = 0.5 * (dx[m] + Complex(0, 1) * dy[m]);
      rep.coefficient_holomorphic[m][i] = rep.holomorphic[m][i] / factorial_d(m);
      rep.max_antiholomorphic = std::max(rep.max_antiholomorphic, std::abs(rep.antiholomorphic[m][i]));
    }
  }

  if (rep.richardson_error > config.max_richardson) {
    std::ostringstream msg;
    msg << "Richardson extrapolation did not settle for d=" << d << ": step disagreement " << rep.richardson_error
        << " exceeds " << config.max_richardson << " (steps " << h1 << ", " << h2 << ")";
    throw NumericalError(msg.str());
  }

  rep.antiholomorphic_vanishes = rep.max_antiholomorphic <= config.tolerance;
  rep.signed_permutation = true;
  std::vector<bool> used(du, false);
  for (std::size_t i = 0; i < du; ++i) {
    std::size_t best = 0;
    for (std::size_t m = 1; m < du; ++m)
      if (std::abs(rep.coefficient_holomorphic[m][i]) > std::abs(rep.coefficient_holomorphic[best][i])) best = m;
    const Complex v = rep.coefficient_holomorphic[best][i];
    const int sign = v.real() >= 0 ? 1 : -1;
    rep.slot.push_back(static_cast<int>(best));
    rep.sign.push_back(sign);
    if (std::abs(v - static_cast<double>(sign)) > config.tolerance || used[best]) rep.signed_permutation = false;
    used[best] = true;
    for (std::size_t m = 0; m < du; ++m)
      if (m != best && std::abs(rep.coefficient_holomorphic[m][i]) > config.tolerance) rep.signed_permutation = false;
  }

  Eigen::MatrixXcd jac(d, d);
  for (std::size_t m = 0; m < du; ++m)
    for (std::size_t i = 0; i < du; ++i)
      jac(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(i)) = rep.coefficient_holomorphic[m][i];
  rep.determinant = jac.determinant();
  rep.regular = rep.signed_permutation && rep.antiholomorphic_vanishes && std::abs(rep.determinant) > 0.5;
  return rep;
}

std::vector<Complex> elementary_symmetric(std::span<const Complex> centers) {
  // coefficients of prod (1 + a_k x): e_0..e_d
  std::vector<Complex> e(centers.size() + 1, 0.0);
  e[0] = 1.0;
  for (std::size_t k = 0; k < centers.size(); ++k)
    for (std::size_t i = k + 1; i >= 1; --i) e[i] += centers[k] * e[i - 1];
  return {e.begin() + 1, e.end()};
}

std::vector<Complex> centers_from_symmetric(std::span<const Complex> lambda) {
  const std::size_t d = lambda.size();
  if (d == 0) return {};
  // Rescale z = s w so the monic polynomial in w has coefficients of modulus
  // at most 1; otherwise a near-zero multiple root is resolved only to
  // eps^(1/d).
  double s = 0.0;
  for (std::size_t i = 1; i <= d; ++i)
    s = std::max(s, std::pow(std::abs(lambda[i - 1]), 1.0 / static_cast<double>(i)));
  if (s == 0.0) return std::vector<Complex>(d, 0.0);

  // Companion matrix of w^d + sum_{i} (-1)^i (lambda_i / s^i) w^(d-i).
  Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
  for (std::size_t r = 1; r < d; ++r) comp(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(r - 1)) = 1.0;
  for (std::size_t i = 1; i <= d; ++i) {
    const Complex c = (i % 2 ? -1.0 : 1.0) * lambda[i - 1] / std::pow(s, static_cast<double>(i));
    comp(0, static_cast<Eigen::Index>(i - 1)) = -c;
  }
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> eig(comp, false);
  std::vector<Complex> roots;
  for (Eigen::Index k = 0; k < eig.eigenvalues().size(); ++k) roots.push_back(s * eig.eigenvalues()(k));
  return roots;
}

namespace {

constexpr double kRigidityConverged = 1e-200;
constexpr int kRigidityMaxIterations = 100;

double max_abs(const std::vector<Complex>& v) {
  double m = 0.0;
  for (const auto& x : v) m = std::max(m, std::abs(x));
  return m;
}

// Taylor coefficients 0..n of prod (z - a_k)/(1 - conj(a_k) z) = P / R.
std::vector<Complex> product_jet(std::span<const Complex> lambda, std::size_t order) {
  return (p_series(lambda, order) * r_series(lambda, order).inverse()).coefficients();
}

RigidityTrial run_rigidity_trial(int n, int index, std::uint64_t master, double tolerance) {
  RigidityTrial trial;
  trial.index = index;
  trial.seed = derive_seed(master, static_cast<std::uint64_t>(index));
  Rng rng(trial.seed);

  const std::size_t d = static_cast<std::size_t>(n + 1);
  const std::size_t order = static_cast<std::size_t>(n);
  for (std::size_t k = 0; k < d; ++k) trial.start_centers.push_back(rng.in_disc(0.9));

  std::vector<Complex> lambda = elementary_symmetric(trial.start_centers);
  std::vector<Complex> f = product_jet(lambda, order);
  double residual = max_abs(f);

  for (int it = 0; it < kRigidityMaxIterations && residual > kRigidityConverged; ++it) {
    trial.iterations = it + 1;
    const Series r_inv = r_series(lambda, order).inverse();
    const Series p = p_series(lambda, order);
    const Series p_r2 = p * r_inv * r_inv;

    // Real 2d x 2d linearization: dF = sum A_i dl_i + B_i conj(dl_i).
    const auto dim = static_cast<Eigen::Index>(2 * d);
    Eigen::MatrixXd jac(dim, dim);
    Eigen::VectorXd rhs(dim);
    for (std::size_t i = 1; i <= d; ++i) {
      const double sgn = i % 2 ? -1.0 : 1.0;
      const Series a = Series::monomial(order, d - i, sgn) * r_inv;
      const Series b = Series::monomial(order, i, -sgn) * p_r2;
      for (std::size_t m = 0; m < d; ++m) {
        const Complex along_re = a[m] + b[m];
        const Complex along_im = Complex(0, 1) * (a[m] - b[m]);
        const auto row = static_cast<Eigen::Index>(m);
        const auto col = static_cast<Eigen::Index>(i - 1);
        jac(row, col) = along_re.real();
        jac(row + static_cast<Eigen::Index>(d), col) = along_re.imag();
        jac(row, col + static_cast<Eigen::Index>(d)) = along_im.real();
        jac(row + static_cast<Eigen::Index>(d), col + static_cast<Eigen::Index>(d)) = along_im.imag();
      }
    }
    for (std::size_t m = 0; m < d; ++m) {
      rhs(static_cast<Eigen::Index>(m)) = -f[m].real();
      rhs(static_cast<Eigen::Index>(m + d)) = -f[m].imag();
    }
    const Eigen::VectorXd step = jac.partialPivLu().solve(rhs);
    if (!step.allFinite()) {
      trial.note = "singular linearization";
      break;
    }

    bool accepted = false;
    double t = 1.0;
    for (int halving = 0; halving < 40 && !accepted; ++halving, t *= 0.5) {
      std::vector<Complex> next = lambda;
      for (std::size_t i = 0; i < d; ++i)
        next[i] += t * Complex(step(static_cast<Eigen::Index>(i)), step(static_cast<Eigen::Index>(i + d)));
      const auto fn = product_jet(next, order);
      const double rn = max_abs(fn);
      if (std::isfinite(rn) && rn < residual) {
        lambda = std::move(next);
        f = fn;
        residual = rn;
        accepted = true;
      }
    }
    if (!accepted) {
      trial.note = "line search stalled";
      break;
    }
  }

  trial.residual = residual;
  trial.converged = residual <= kRigidityConverged;
  if (!trial.converged && trial.note.empty()) trial.note = "iteration limit";
  trial.final_centers = centers_from_symmetric(lambda);
  trial.max_center_modulus = max_abs(trial.final_centers);
  trial.pass = trial.converged && trial.max_center_modulus <= tolerance;
  return trial;
}

RigidityReport rigidity_report(int n, int trials, std::uint64_t seed, double tolerance) {
  if (n < 1) throw std::invalid_argument("dimension n must be at least 1");
  if (trials < 0) throw std::invalid_argument("trial count must be nonnegative");
  if (!(tolerance > 0)) throw std::invalid_argument("tolerance must be positive");
  RigidityReport rep;
  rep.n = n;
  rep.trials = trials;
  rep.seed = seed;
  rep.tolerance = tolerance;
  rep.results.resize(static_cast<std::size_t>(trials));
  return rep;
}

void count_passes(RigidityReport& rep) {
  rep.passed = static_cast<int>(std::count_if(rep.results.begin(), rep.results.end(),
                                              [](const RigidityTrial& t) { return t.pass; }));
}

}  // namespace

RigidityReport spherical_rigidity_check(int n, int trials, std::uint64_t seed, double tolerance) {
  RigidityReport rep = rigidity_report(n, trials, seed, tolerance);
#pragma omp parallel for schedule(dynamic)
  for (int t = 0; t < trials; ++t)
    rep.results[static_cast<std::size_t>(t)] = run_rigidity_trial(n, t, seed, tolerance);
  count_passes(rep);
  return rep;
}

RigidityReport spherical_rigidity_check_serial(int n, int trials, std::uint64_t seed, double tolerance) {
  RigidityReport rep = rigidity_report(n, trials, seed, tolerance);
  for (int t = 0; t < trials; ++t) rep.results[static_cast<std::size_t>(t)] = run_rigidity_trial(n, t, seed, tolerance);
  count_passes(rep);
  return rep;
}

BranchDegree branch_degree(const BranchData& data) {
  if (data.n < 1 || data.m < 1 || data.deg_x < 1) throw std::invalid_argument("branch data must be positive");
  BranchDegree out;
  out.degree = (Rational(data.n + 1) - Rational(1, data.m)) * Rational(data.deg_x);
  out.integral = out.degree.get_den() == 1;
  out.divisible_by_n_plus_1 = out.integral && mpz_divisible_ui_p(out.degree.get_num_mpz_t(),
                                                                static_cast<unsigned long>(data.n + 1)) != 0;
  return out;
}

Rational maslov_in_cover(int n, long m, const Rational& deg_b, const Rational& mu_base, const Rational& v_dot_b) {
  if (m < 1) throw std::invalid_argument("m must be positive");
  if (deg_b <= 0) throw std::invalid_argument("branch degree must be positive");
  return mu_base - Rational(2) / deg_b * (Rational(n + 1) - Rational(1, m)) * v_dot_b;
}

BigInt assembly_count(std::span<const long> alpha) {
  long factors = 0;
  for (long a : alpha) {
    if (a < 0) throw std::invalid_argument("block sizes must be nonnegative");
    factors += a;
  }
  const std::size_t blocks = alpha.size();
  if (blocks == 0) return factors == 0 ? 1 : 0;
  double space = std::pow(static_cast<double>(blocks), static_cast<double>(factors));
  if (space > 5e7) throw std::invalid_argument("assembly enumeration too large");

  std::vector<std::size_t> assign(static_cast<std::size_t>(factors), 0);
  std::vector<long> fiber(blocks, 0);
  BigInt count = 0;
  while (true) {
    std::fill(fiber.begin(), fiber.end(), 0);
    for (auto b : assign) ++fiber[b];
    if (std::equal(fiber.begin(), fiber.end(), alpha.begin())) ++count;
    std::size_t pos = 0;
    while (pos < assign.size() && ++assign[pos] == blocks) assign[pos++] = 0;
    if (pos == assign.size()) break;
  }
  return count;
}

}  // namespace mirrorkit
