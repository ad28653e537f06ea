#include "mirrorkit/fs_combinatorics.hpp"

#include <stdexcept>

namespace mirrorkit {

namespace {

void require_dimension(int n) {
  if (n < 1) throw std::invalid_argument("dimension n must be at least 1");
}

}  // namespace

EuclideanDivision euclidean_division(long a, long divisor) {
  if (divisor <= 0) throw std::invalid_argument("divisor must be positive");
  long q = a / divisor;
  long r = a % divisor;
  if (r < 0) {
    r += divisor;
    --q;
  }
  return {q, r};
}

CoverThimble CoverThimble::from_degree(int n, long d) {
  require_dimension(n);
  // d = -k + i(n+1): i = ceil(d / (n+1)).
  auto [q, r] = euclidean_division(d, n + 1);
  if (r == 0) return {0, q};
  return {static_cast<int>(n + 1 - r), q + 1};
}

std::vector<CoverThimble> psi_decompose(int n, long j) {
  require_dimension(n);
  auto [q, r] = euclidean_division(j, n + 1);
  std::vector<CoverThimble> out;
  for (int k = 0; k <= n; ++k) out.push_back({k, k <= n - r ? q : q + 1});
  return out;
}

TwistedThimble serre_twist(int n, const CoverThimble& t) {
  require_dimension(n);
  return {{t.k, t.i - 1}, n};
}

TwistedThimble inverse_serre_twist(int n, const CoverThimble& t) {
  require_dimension(n);
  return {{t.k, t.i + 1}, -n};
}

HomDim pn_hom_dim(int n, long d_src, long d_tgt) {
  require_dimension(n);
  const long gap = d_tgt - d_src;
  if (gap >= 0) return {binomial(gap + n, n), 0};
  BigInt dual = binomial(-gap - 1, n);
  return {dual, dual == 0 ? 0 : n};
}

BigInt futaki_ueda_dim(int n, int i, int j) {
  require_dimension(n);
  if (i < 0 || i > n || j < 0 || j > n) throw std::invalid_argument("exceptional thimble index out of [0, n]");
  return j >= i ? binomial(n + 1, j - i) : BigInt(0);
}

DimReport a_side_dim(int n, long i, long j) {
  DimReport rep;
  rep.n = n;
  rep.i = i;
  rep.j = j;
  rep.a_side = 0;
  for (long k = 0; k <= n; ++k) {
    const HomDim h = pn_hom_dim(n, i, j - k);
    rep.blocks.push_back(h.dim);
    rep.a_side += h.dim;
    if (h.shift != 0) rep.shift = h.shift;
  }
  const HomSpace b = hom_space(n, i, j);
  rep.b_side = b.dimension;
  if (rep.a_side == 0) rep.shift = b.shift;
  rep.match = rep.a_side == rep.b_side && (rep.a_side == 0 || rep.shift == b.shift);
  return rep;
}

GradingGroup::GradingGroup(int n) : n_(n) { require_dimension(n); }

ToricDegree GradingGroup::normalize(std::span<const long> g) const {
  if (g.size() != static_cast<std::size_t>(n_ + 1)) throw std::invalid_argument("grading vector needs n+1 entries");
  ToricDegree v;
  for (std::size_t k = 1; k < g.size(); ++k) v.v.push_back(g[k] - g[0]);
  return v;
}

std::vector<long> GradingGroup::lift(const ToricDegree& v) const {
  if (v.v.size() != static_cast<std::size_t>(n_)) throw std::invalid_argument("toric degree needs n entries");
  std::vector<long> g{0};
  g.insert(g.end(), v.v.begin(), v.v.end());
  return g;
}

std::vector<long> GradingGroup::generator(int k) const {
  if (k < 0 || k > n_) throw std::out_of_range("generator index");
  std::vector<long> g(static_cast<std::size_t>(n_ + 1), 0);
  g[static_cast<std::size_t>(k)] = 1;
  return g;
}

std::optional<RingMonomial> chord_to_monomial(int n, std::span<const long> g, long d) {
  if (d < 0) throw std::invalid_argument("chord degree must be nonnegative");
  return monomial_by_toric_degree(n, d, GradingGroup(n).normalize(g));
}

}  // namespace mirrorkit
