#ifndef MIRRORKIT_DISC_NUMERICS_HPP
#define MIRRORKIT_DISC_NUMERICS_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "mirrorkit/exact_poly.hpp"
#include "mirrorkit/series.hpp"

namespace mirrorkit {

/// A numerical procedure failed to converge; the message carries diagnostics.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// xi * prod_k (z - a_k) / (1 - conj(a_k) z) with |xi| = 1 and |a_k| < 1.
class BlaschkeProduct {
 public:
  BlaschkeProduct(Complex xi, std::vector<Complex> centers);

  Complex xi() const { return xi_; }
  const std::vector<Complex>& centers() const { return centers_; }
  std::size_t degree() const { return centers_.size(); }

  /// Requires |z| <= 1.
  Complex operator()(Complex z) const;
  /// Taylor expansion at 0 through z^order.
  Series series(std::size_t order) const;

  friend BlaschkeProduct operator*(const BlaschkeProduct& a, const BlaschkeProduct& b);

 private:
  Complex xi_;
  std::vector<Complex> centers_;
};

Complex blaschke_eval(const BlaschkeProduct& b, Complex z);

/// (h(0), h'(0), ..., h^(order)(0)).
struct JetVector {
  std::vector<Complex> entries;
};

JetVector blaschke_jet(const BlaschkeProduct& b, std::size_t order);

/// Winding number of theta -> b(e^{i theta}) around 0, from `samples`
/// boundary points.  Equals the degree.
long boundary_winding(const BlaschkeProduct& b, int samples = 2048);

/// Degree-d disc automorphism products normalized by v(1) = 1, written in
/// the elementary symmetric functions lambda_1..lambda_d of the centers:
///   v = R(conj(lambda), 1) / P(lambda, 1) * P(lambda, z) / R(conj(lambda), z)
/// with P = sum (-1)^i lambda_i z^(d-i) and R = sum (-1)^i conj(lambda_i) z^i.
Series normalized_product_series(std::span<const Complex> lambda, std::size_t order);

/// Jet of order d-1 (d entries) of the normalized product with coordinates lambda.
std::vector<Complex> jet_map(std::span<const Complex> lambda);

struct FiniteDifferenceConfig {
  double step = 1e-4;          ///< coarse step; Richardson uses step and step / 2
  double tolerance = 1e-6;     ///< on the antiholomorphic block and pattern entries
  double max_richardson = 1e-4;  ///< larger disagreement between steps is a failure
};

struct JacobianReport {
  int d = 0;
  /// Wirtinger derivatives d(jet slot m)/d(lambda_i), row m, column i-1.
  std::vector<std::vector<Complex>> holomorphic;
  std::vector<std::vector<Complex>> antiholomorphic;
  /// holomorphic with row m divided by m!, i.e. derivatives of Taylor coefficients.
  std::vector<std::vector<Complex>> coefficient_holomorphic;
  double max_antiholomorphic = 0.0;
  double richardson_error = 0.0;
  /// Per column i (lambda_i): 0-based jet slot of the single nonzero entry, and its sign.
  std::vector<int> slot;
  std::vector<int> sign;
  bool signed_permutation = false;
  bool antiholomorphic_vanishes = false;
  Complex determinant;  ///< of coefficient_holomorphic
  bool regular = false;
};

/// Finite-difference Jacobian of jet_map at lambda = 0, central differences
/// with one Richardson step.  Throws NumericalError when the two step sizes
/// disagree by more than max_richardson.
JacobianReport jet_jacobian_at_zero(int d, const FiniteDifferenceConfig& config = {});

struct RigidityTrial {
  int index = 0;
  std::uint64_t seed = 0;
  std::vector<Complex> start_centers;
  std::vector<Complex> final_centers;
  bool converged = false;
  int iterations = 0;
  double residual = 0.0;  ///< max |Taylor coefficient| of the constrained jet at exit
  double max_center_modulus = 0.0;
  bool pass = false;
  std::string note;
};

struct RigidityReport {
  int n = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  double tolerance = 0.0;
  std::vector<RigidityTrial> results;  ///< in trial order
  int passed = 0;

  bool all_pass() const { return passed == trials; }
};

/// At f = f0: random tuples of n+1 degree-one disc automorphisms are driven by
/// Newton's method until their product vanishes to order n+1 at 0; the
/// centers recovered from the solution must all be 0.  Trials run under OpenMP.
RigidityReport spherical_rigidity_check(int n, int trials, std::uint64_t seed, double tolerance = 1e-8);
RigidityReport spherical_rigidity_check_serial(int n, int trials, std::uint64_t seed, double tolerance = 1e-8);

/// Roots of z^d - lambda_1 z^(d-1) + ... + (-1)^d lambda_d.
std::vector<Complex> centers_from_symmetric(std::span<const Complex> lambda);
/// lambda_1..lambda_d of the given centers.
std::vector<Complex> elementary_symmetric(std::span<const Complex> centers);

struct BranchData {
  int n = 0;
  long m = 1;      ///< multiple of the anticanonical class that is very ample
  long deg_x = 1;  ///< degree of X in the embedding
};

struct BranchDegree {
  Rational degree;
  bool integral = false;
  bool divisible_by_n_plus_1 = false;
};

/// deg B = (n + 1 - 1/m) deg X.
BranchDegree branch_degree(const BranchData& data);

/// mu_base - (2 / deg_B)(n + 1 - 1/m) v.B.  Whether v.B counts the reduced
/// branch divisor or the cycle with multiplicity is the caller's choice.
Rational maslov_in_cover(int n, long m, const Rational& deg_b, const Rational& mu_base, const Rational& v_dot_b);

/// Number of maps from n+1 labelled disc factors to n+1 blocks with block k
/// of size alpha_k, by explicit enumeration of all (n+1)^(n+1) assignments.
BigInt assembly_count(std::span<const long> alpha);

}  // namespace mirrorkit

#endif  // MIRRORKIT_DISC_NUMERICS_HPP
