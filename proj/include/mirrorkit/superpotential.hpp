#ifndef MIRRORKIT_SUPERPOTENTIAL_HPP
#define MIRRORKIT_SUPERPOTENTIAL_HPP

#include <compare>
#include <map>
#include <vector>

#include "mirrorkit/exact_poly.hpp"
#include "mirrorkit/rational_matrix.hpp"

namespace mirrorkit {

/// Torus coordinates y1..yn on the mirror of the lifted torus.
Variables y_variables(int n);
/// Coordinates z0..zn on the mirror of the Clifford torus.
Variables z_variables(int n);

/// W = (1 + y1 + ... + yn)^(n+1) / (y1...yn) - (n+1)!
LaurentPolynomial build_W(int n);
/// W + (n+1)!, the form whose critical values are 0 and (n+1)^(n+1).
LaurentPolynomial build_W_hat(int n);
/// y1 + ... + yn + 1/(y1...yn)
LaurentPolynomial build_W_cl(int n);

/// Images of the cyclic covering yi -> yi * (y1...yn).
std::vector<LaurentPolynomial> covering_map_images(int n);
/// W_hat composed with the covering map.  Equals build_W_cl(n)^(n+1).
LaurentPolynomial covering_pullback(int n);

/// Relative class of a disc, recorded by its intersection numbers with the
/// coordinate hyperplanes.
struct DiscClass {
  std::vector<long> alpha;

  long maslov() const;
  /// The class (1, ..., 1) of a line.
  bool spherical() const;

  auto operator<=>(const DiscClass&) const = default;
};

/// Counts of Maslov index 2 discs on the lifted torus, keyed by their image
/// class downstairs (all classes with sum alpha_i = n+1).
struct DiscCountTable {
  int n = 0;
  std::map<DiscClass, BigInt> rows;

  BigInt total() const;
};

DiscCountTable disc_counts(int n);

/// Normal form modulo z0...zn = 1: strips the largest power of the product
/// monomial from each term.  Confluent since the relation is one binomial.
LaurentPolynomial reduce_product_relation(const LaurentPolynomial& p);

struct CountIdentityResult {
  bool holds = false;
  LaurentPolynomial count_side;      ///< sum_alpha m(alpha) z^alpha, reduced
  LaurentPolynomial expansion_side;  ///< (z0 + ... + zn)^(n+1) - (n+1)!, reduced
  LaurentPolynomial residual;        ///< difference, zero when the identity holds
};

CountIdentityResult verify_count_identity(int n);

/// W rewritten in the z coordinates through yk = zk / z0, reduced by the
/// product relation.  Should agree with the count side above.
LaurentPolynomial coordinate_change_pullback(int n);

/// Exact second derivatives of W_hat at y = (1, ..., 1).
RationalMatrix hessian_at_symmetric_point(int n);

}  // namespace mirrorkit

#endif  // MIRRORKIT_SUPERPOTENTIAL_HPP
