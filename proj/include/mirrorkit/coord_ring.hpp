#ifndef MIRRORKIT_COORD_RING_HPP
#define MIRRORKIT_COORD_RING_HPP

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "mirrorkit/exact_poly.hpp"
#include "mirrorkit/rational_matrix.hpp"

namespace mirrorkit {

/// Monomial t^t_exp x0^a0 ... xn^an of S = k[x0..xn, t] / (t^(n+1) - x0...xn),
/// kept in normal form t_exp <= n.
struct RingMonomial {
  int n = 0;
  long t_exp = 0;
  std::vector<long> x_exps;

  long degree() const;
  std::string to_string() const;

  auto operator<=>(const RingMonomial&) const = default;
};

/// Weight under the torus acting on x1..xn: (a1 - a0, ..., an - a0).
struct ToricDegree {
  std::vector<long> v;
  auto operator<=>(const ToricDegree&) const = default;
};

/// Applies t^(n+1) = x0...xn until t_exp <= n.  Negative exponents throw.
RingMonomial normal_form(int n, long t_exp, std::vector<long> x_exps);
RingMonomial operator*(const RingMonomial& a, const RingMonomial& b);

ToricDegree toric_degree(const RingMonomial& m);

/// dim S_d = sum_{a=0}^{min(n,d)} C(d - a + n, n); zero for d < 0.
BigInt graded_dim(int n, long d);
/// Normal-form monomials of degree d, ordered by t_exp then decreasing x exponents.
std::vector<RingMonomial> graded_basis(int n, long d);

/// The unique degree-d monomial with toric degree v, if any.  Solved
/// directly: a_k = a_0 + v_k forces (n+1) a_0 = d - t - sum v, and only one
/// t in [0, n] can make that divisible.
std::optional<RingMonomial> monomial_by_toric_degree(int n, long d, const ToricDegree& v);

/// hom(O(i), O(j)) on X0.  For j >= i a monomial basis of S_(j-i).  For
/// j < i only the dimension of the degree-n part, Serre dual (with dualizing
/// sheaf O(-1)) to hom(O(j), O(i-1)).
struct HomSpace {
  int n = 0;
  long i = 0;
  long j = 0;
  std::vector<RingMonomial> basis;
  BigInt dimension;
  int shift = 0;
  bool serre_dual = false;
  long dual_source = 0;
  long dual_target = 0;
};

HomSpace hom_space(int n, long i, long j);

/// x0..xn
Variables x_variables(int n);
/// x0 * ... * xn as a polynomial in x_variables(n).
LaurentPolynomial product_polynomial(int n);

/// Map E(i) -> E(j) between E = O + O(-1) + ... + O(-n) on P^n.  Block
/// (l, k) sends summand k of E(i), i.e. O(i - k), to summand l of E(j), i.e.
/// O(j - l); blocks are row-major.
class BlockMap {
 public:
  BlockMap(int n, long source, long target);

  int n() const { return n_; }
  long source() const { return source_; }
  long target() const { return target_; }
  std::size_t size() const { return static_cast<std::size_t>(n_ + 1); }

  const LaurentPolynomial& at(std::size_t l, std::size_t k) const { return blocks_[l * size() + k]; }
  LaurentPolynomial& at(std::size_t l, std::size_t k) { return blocks_[l * size() + k]; }

  /// Degree a homogeneous block (l, k) must have: (j - l) - (i - k).
  long block_degree(std::size_t l, std::size_t k) const;
  /// Every block is zero or homogeneous of its block degree with nonnegative exponents.
  bool degrees_consistent() const;

  /// Multiplication by f on every diagonal block, E(i) -> E(i + deg f).
  static BlockMap diagonal(int n, long source, const LaurentPolynomial& f, long degree);

  friend bool operator==(const BlockMap&, const BlockMap&);

 private:
  int n_;
  long source_;
  long target_;
  std::vector<LaurentPolynomial> blocks_;
};

/// second o first, for first: E(i) -> E(j) and second: E(j) -> E(k).
BlockMap compose(const BlockMap& second, const BlockMap& first);

/// Pushforward of multiplication by t, E(i) -> E(i + 1): identity blocks
/// O(i-k) -> O(i+1-(k+1)) and the corner O(i-n) -> O(i+1) multiplying by f.
BlockMap pushforward_of_t(int n, const LaurentPolynomial& f, long source = 0);
/// Pushforward of multiplication by m: E(i) -> E(j), j - i = deg m.  Each
/// summand gets exactly one entry, x^a or x^a f after wrapping past t^n.
BlockMap pushforward_of_monomial(const RingMonomial& m, long i, long j, const LaurentPolynomial& f);
BlockMap pushforward_of_monomial(const RingMonomial& m, long i, long j);

/// Matrix of S_1 x S_d -> S_(d+1) in the monomial bases: one row per
/// product of basis pairs, one column per basis monomial of degree d+1.
RationalMatrix multiplication_matrix(int n, long d);

}  // namespace mirrorkit

#endif  // MIRRORKIT_COORD_RING_HPP
