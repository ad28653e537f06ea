#ifndef MIRRORKIT_FS_COMBINATORICS_HPP
#define MIRRORKIT_FS_COMBINATORICS_HPP

#include <optional>
#include <span>
#include <vector>

#include "mirrorkit/coord_ring.hpp"
#include "mirrorkit/exact_poly.hpp"

namespace mirrorkit {

/// Thimble L_j in the base, indexed by its winding around 0.
struct BaseThimble {
  long j = 0;
};

/// Thimble L_{k,i} of the cover: critical value (n+1) zeta^(-k), winding i.
/// Mirror to O(-k + i(n+1)) on P^n.
struct CoverThimble {
  int k = 0;
  long i = 0;

  long mirror_degree(int n) const { return -k + i * (n + 1); }
  /// Inverse of mirror_degree: the unique (k, i) with 0 <= k <= n.
  static CoverThimble from_degree(int n, long d);

  bool operator==(const CoverThimble&) const = default;
};

/// Floor division with 0 <= remainder < divisor.
struct EuclideanDivision {
  long quotient;
  long remainder;
};
EuclideanDivision euclidean_division(long a, long divisor);

/// Components of the preimage of L_j: with j = q(n+1) + r, j_k = q for
/// k <= n - r and q + 1 beyond.
std::vector<CoverThimble> psi_decompose(int n, long j);

struct TwistedThimble {
  CoverThimble thimble;
  int shift = 0;
};

/// Serre functor: O(d) -> O(d - (n+1))[n], i.e. (k, i) -> (k, i - 1).
TwistedThimble serre_twist(int n, const CoverThimble& t);
TwistedThimble inverse_serre_twist(int n, const CoverThimble& t);

struct HomDim {
  BigInt dim;
  int shift = 0;
};

/// dim Hom(O(src), O(tgt)) on P^n: Sym^(tgt-src) for tgt >= src, otherwise
/// the Serre dual C(src - tgt - 1, n) placed in degree n.
HomDim pn_hom_dim(int n, long d_src, long d_tgt);

/// dim HW(C_i, C_j) = C(n+1, j-i) between the exceptional thimbles, 0 <= i, j <= n.
BigInt futaki_ueda_dim(int n, int i, int j);

struct DimReport {
  int n = 0;
  long i = 0;
  long j = 0;
  BigInt a_side;
  BigInt b_side;
  std::vector<BigInt> blocks;  ///< pn_hom_dim(n, i, j - k) for k = 0..n
  int shift = 0;
  bool match = false;
};

/// A side: sum over the cover summands of psi(L_j) seen from one summand of
/// psi(L_i).  B side: hom_space(n, i, j) on X0.
DimReport a_side_dim(int n, long i, long j);

/// G = Z g0 + ... + Z gn / (g0 + ... + gn), identified with Z^n by
/// subtracting the g0 coordinate.
class GradingGroup {
 public:
  explicit GradingGroup(int n);

  int n() const { return n_; }
  ToricDegree normalize(std::span<const long> g) const;
  /// Representative (0, v1, ..., vn).
  std::vector<long> lift(const ToricDegree& v) const;
  /// Class of the generator g_k.
  std::vector<long> generator(int k) const;

 private:
  int n_;
};

/// Degree-d monomial on X0 mirror to a chord of grading g.
std::optional<RingMonomial> chord_to_monomial(int n, std::span<const long> g, long d);

}  // namespace mirrorkit

#endif  // MIRRORKIT_FS_COMBINATORICS_HPP
