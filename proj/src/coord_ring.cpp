#include "mirrorkit/coord_ring.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace mirrorkit {

namespace {

void require_dimension(int n) {
  if (n < 1) throw std::invalid_argument("dimension n must be at least 1");
}

}  // namespace

long RingMonomial::degree() const {
  return t_exp + std::accumulate(x_exps.begin(), x_exps.end(), 0L);
}

std::string RingMonomial::to_string() const {
  std::ostringstream out;
  bool any = false;
  auto emit = [&](const std::string& name, long e) {
    if (e == 0) return;
    out << (any ? "*" : "") << name;
    if (e != 1) out << '^' << e;
    any = true;
  };
  emit("t", t_exp);
  for (std::size_t k = 0; k < x_exps.size(); ++k) emit("x" + std::to_string(k), x_exps[k]);
  return any ? out.str() : "1";
}

RingMonomial normal_form(int n, long t_exp, std::vector<long> x_exps) {
  require_dimension(n);
  if (x_exps.size() != static_cast<std::size_t>(n + 1)) throw std::invalid_argument("need n+1 x exponents");
  if (t_exp < 0 || std::any_of(x_exps.begin(), x_exps.end(), [](long a) { return a < 0; }))
    throw std::invalid_argument("ring monomial exponents must be nonnegative");
  const long wraps = t_exp / (n + 1);
  for (auto& a : x_exps) a += wraps;
  return RingMonomial{n, t_exp - wraps * (n + 1), std::move(x_exps)};
}

RingMonomial operator*(const RingMonomial& a, const RingMonomial& b) {
  if (a.n != b.n) throw std::invalid_argument("monomials from different rings");
  std::vector<long> x(a.x_exps.size());
  for (std::size_t k = 0; k < x.size(); ++k) x[k] = a.x_exps[k] + b.x_exps[k];
  return normal_form(a.n, a.t_exp + b.t_exp, std::move(x));
}

ToricDegree toric_degree(const RingMonomial& m) {
  ToricDegree d;
  for (std::size_t k = 1; k < m.x_exps.size(); ++k) d.v.push_back(m.x_exps[k] - m.x_exps[0]);
  return d;
}

BigInt graded_dim(int n, long d) {
  require_dimension(n);
  BigInt sum = 0;
  for (long a = 0; a <= std::min<long>(n, d); ++a) sum += binomial(d - a + n, n);
  return sum;
}

std::vector<RingMonomial> graded_basis(int n, long d) {
  require_dimension(n);
  std::vector<RingMonomial> basis;
  for (long t = 0; t <= std::min<long>(n, d); ++t)
    for_each_composition(d - t, static_cast<std::size_t>(n + 1),
                         [&](const std::vector<long>& x) { basis.push_back(RingMonomial{n, t, x}); });
  return basis;
}

std::optional<RingMonomial> monomial_by_toric_degree(int n, long d, const ToricDegree& v) {
  require_dimension(n);
  if (v.v.size() != static_cast<std::size_t>(n)) throw std::invalid_argument("toric degree must have n entries");
  if (d < 0) return std::nullopt;
  const long vsum = std::accumulate(v.v.begin(), v.v.end(), 0L);
  const long vmin = std::min(0L, *std::min_element(v.v.begin(), v.v.end()));
  for (long t = 0; t <= std::min<long>(n, d); ++t) {
    const long rest = d - t - vsum;
    if (rest < 0 || rest % (n + 1) != 0) continue;
    const long a0 = rest / (n + 1);
    if (a0 + vmin < 0) return std::nullopt;
    std::vector<long> x{a0};
    for (long vk : v.v) x.push_back(a0 + vk);
    return RingMonomial{n, t, std::move(x)};
  }
  return std::nullopt;
}

HomSpace hom_space(int n, long i, long j) {
  HomSpace h;
  h.n = n;
  h.i = i;
  h.j = j;
  if (j >= i) {
    h.basis = graded_basis(n, j - i);
    h.dimension = static_cast<unsigned long>(h.basis.size());
    return h;
  }
  h.serre_dual = true;
  h.shift = n;
  h.dual_source = j;
  h.dual_target = i - 1;
  h.dimension = graded_dim(n, i - 1 - j);
  return h;
}

Variables x_variables(int n) {
  require_dimension(n);
  return make_variables("x", 0, n);
}

LaurentPolynomial product_polynomial(int n) {
  const Variables x = x_variables(n);
  Exponent e(x->size());
  for (auto& v : e.entries) v = 1;
  return LaurentPolynomial::monomial(x, e);
}

BlockMap::BlockMap(int n, long source, long target) : n_(n), source_(source), target_(target) {
  require_dimension(n);
  blocks_.assign(size() * size(), LaurentPolynomial(x_variables(n)));
}

long BlockMap::block_degree(std::size_t l, std::size_t k) const {
  return (target_ - static_cast<long>(l)) - (source_ - static_cast<long>(k));
}

bool BlockMap::degrees_consistent() const {
  for (std::size_t l = 0; l < size(); ++l)
    for (std::size_t k = 0; k < size(); ++k) {
      const auto& p = at(l, k);
      if (p.is_zero()) continue;
      const long want = block_degree(l, k);
      if (want < 0) return false;
      for (const auto& [e, c] : p.terms()) {
        if (e.total() != want) return false;
        for (auto v : e.entries)
          if (v < 0) return false;
      }
    }
  return true;
}

BlockMap BlockMap::diagonal(int n, long source, const LaurentPolynomial& f, long degree) {
  BlockMap m(n, source, source + degree);
  for (std::size_t k = 0; k < m.size(); ++k) m.at(k, k) = f;
  return m;
}

bool operator==(const BlockMap& a, const BlockMap& b) {
  return a.n_ == b.n_ && a.source_ == b.source_ && a.target_ == b.target_ && a.blocks_ == b.blocks_;
}

BlockMap compose(const BlockMap& second, const BlockMap& first) {
  if (first.n() != second.n() || first.target() != second.source())
    throw std::invalid_argument("block maps are not composable");
  BlockMap out(first.n(), first.source(), second.target());
  const std::size_t s = out.size();
  for (std::size_t l = 0; l < s; ++l)
    for (std::size_t k = 0; k < s; ++k)
      for (std::size_t m = 0; m < s; ++m) {
        if (second.at(l, m).is_zero() || first.at(m, k).is_zero()) continue;
        out.at(l, k) += second.at(l, m) * first.at(m, k);
      }
  return out;
}

namespace {

void require_relation(int n, const LaurentPolynomial& f) {
  if (!same_variables(f.variables(), x_variables(n))) throw ContextError("f must be a polynomial in x0..xn");
  for (const auto& [e, c] : f.terms()) {
    bool nonnegative = std::all_of(e.entries.begin(), e.entries.end(), [](auto v) { return v >= 0; });
    if (!nonnegative || e.total() != n + 1)
      throw std::invalid_argument("f must be homogeneous of degree n+1");
  }
}

}  // namespace

BlockMap pushforward_of_t(int n, const LaurentPolynomial& f, long source) {
  require_relation(n, f);
  BlockMap m(n, source, source + 1);
  const Variables x = x_variables(n);
  for (std::size_t k = 0; k + 1 < m.size(); ++k) m.at(k + 1, k) = LaurentPolynomial::constant(x, 1);
  m.at(0, m.size() - 1) = f;
  return m;
}

BlockMap pushforward_of_monomial(const RingMonomial& mono, long i, long j, const LaurentPolynomial& f) {
  const int n = mono.n;
  require_relation(n, f);
  if (mono.t_exp < 0 || mono.t_exp > n) throw std::invalid_argument("monomial must be in normal form");
  if (mono.degree() != j - i) throw std::invalid_argument("monomial degree must equal j - i");

  const Variables x = x_variables(n);
  const LaurentPolynomial xpart =
      LaurentPolynomial::monomial(x, Exponent(std::vector<std::int64_t>(mono.x_exps.begin(), mono.x_exps.end())));
  BlockMap out(n, i, j);
  // x^a t^s sends t^k r to x^a t^(s+k) r; past t^n, t^(n+1) = f.
  for (long k = 0; k <= n; ++k) {
    const long power = mono.t_exp + k;
    if (power <= n) {
      out.at(static_cast<std::size_t>(power), static_cast<std::size_t>(k)) = xpart;
    } else {
      out.at(static_cast<std::size_t>(power - n - 1), static_cast<std::size_t>(k)) = xpart * f;
    }
  }
  return out;
}

BlockMap pushforward_of_monomial(const RingMonomial& m, long i, long j) {
  return pushforward_of_monomial(m, i, j, product_polynomial(m.n));
}

RationalMatrix multiplication_matrix(int n, long d) {
  const auto ones = graded_basis(n, 1);
  const auto source = graded_basis(n, d);
  const auto target = graded_basis(n, d + 1);
  std::map<RingMonomial, std::size_t> column;
  for (std::size_t c = 0; c < target.size(); ++c) column.emplace(target[c], c);

  RationalMatrix m(ones.size() * source.size(), target.size());
  std::size_t row = 0;
  for (const auto& a : ones)
    for (const auto& b : source) m(row++, column.at(a * b)) = 1;
  return m;
}

}  // namespace mirrorkit
