#ifndef MIRRORKIT_CRITICAL_HPP
#define MIRRORKIT_CRITICAL_HPP

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mirrorkit/exact_poly.hpp"

namespace mirrorkit {

using ComplexLD = std::complex<long double>;

/// Value, gradient and Hessian of a Laurent polynomial, evaluated in
/// extended precision directly from its exact term list.
class GradientSystem {
 public:
  explicit GradientSystem(const LaurentPolynomial& p);

  struct Jet {
    ComplexLD value;
    std::vector<ComplexLD> gradient;
    std::vector<ComplexLD> hessian;  ///< row-major n x n, empty unless requested
  };

  int dimension() const { return n_; }
  Jet evaluate(std::span<const ComplexLD> y, bool with_hessian) const;

 private:
  struct Term {
    std::vector<int> exponent;
    long double coefficient;
  };
  int n_;
  std::vector<Term> terms_;
  std::vector<int> lowest_;
  std::vector<int> highest_;
};

struct SolverConfig {
  int starts = 64;             ///< random starts in (C*)^n
  int hyperplane_samples = 8;  ///< explicit samples of the degenerate locus 1 + sum y = 0
  std::uint64_t seed = 0;
  double newton_tol = 1e-10;   ///< on the gradient norm
  double cluster_radius = 1e-6;
  int max_iterations = 200;
};

enum class StartKind { symmetric, hyperplane, random };
const char* to_string(StartKind kind);

struct StartOutcome {
  int index = 0;
  StartKind kind = StartKind::random;
  bool converged = false;
  int iterations = 0;
  double gradient_norm = 0.0;
  std::vector<std::complex<double>> point;
  std::complex<double> value;
  std::string note;  ///< reason for divergence, empty on success
};

struct CriticalPoint {
  std::vector<std::complex<double>> coords;
  std::complex<double> value_hat;  ///< W_hat = W + (n+1)!
  std::complex<double> value_w;    ///< W itself
  double gradient_norm = 0.0;
  std::vector<double> hessian_eigen_abs;  ///< ascending
  int hits = 0;                           ///< converged starts in this cluster
  StartKind found_by = StartKind::random;
};

struct CriticalReport {
  int n = 0;
  SolverConfig config;
  std::vector<CriticalPoint> points;  ///< one per distinct value, ascending by real part
  std::vector<StartOutcome> starts;   ///< in start index order
  int converged = 0;
  int diverged = 0;
  Rational symmetric_value;  ///< exact W_hat(1, ..., 1)
  Rational expected_small;   ///< (n+1)^(n+1)
};

/// Multi-start damped Newton on grad W_hat, starts run under OpenMP.
CriticalReport critical_points(int n, const SolverConfig& config = {});
/// Same computation on one thread; the reference for the parallel kernel.
CriticalReport critical_points_serial(int n, const SolverConfig& config = {});

}  // namespace mirrorkit

#endif  // MIRRORKIT_CRITICAL_HPP
