#include "mirrorkit/superpotential.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace mirrorkit {

namespace {

void require_dimension(int n) {
  if (n < 1) throw std::invalid_argument("dimension n must be at least 1");
}

LaurentPolynomial inverse_product(const Variables& vars) {
  Exponent e(vars->size());
  for (auto& v : e.entries) v = -1;
  return LaurentPolynomial::monomial(vars, e);
}

LaurentPolynomial variable_sum(const Variables& vars, bool with_one) {
  LaurentPolynomial s = with_one ? LaurentPolynomial::constant(vars, 1) : LaurentPolynomial(vars);
  for (std::size_t i = 0; i < vars->size(); ++i) s += LaurentPolynomial::variable(vars, i);
  return s;
}

}  // namespace

Variables y_variables(int n) {
  require_dimension(n);
  return make_variables("y", 1, n);
}

Variables z_variables(int n) {
  require_dimension(n);
  return make_variables("z", 0, n);
}

LaurentPolynomial build_W_hat(int n) {
  const Variables y = y_variables(n);
  return variable_sum(y, true).pow(static_cast<unsigned>(n + 1)) * inverse_product(y);
}

LaurentPolynomial build_W(int n) {
  LaurentPolynomial w = build_W_hat(n);
  w.add_term(Exponent(static_cast<std::size_t>(n)), -Rational(factorial(static_cast<unsigned>(n + 1))));
  return w;
}

LaurentPolynomial build_W_cl(int n) {
  const Variables y = y_variables(n);
  return variable_sum(y, false) + inverse_product(y);
}

std::vector<LaurentPolynomial> covering_map_images(int n) {
  const Variables y = y_variables(n);
  std::vector<LaurentPolynomial> images;
  for (int i = 0; i < n; ++i) {
    Exponent e(static_cast<std::size_t>(n));
    for (auto& v : e.entries) v = 1;
    e[static_cast<std::size_t>(i)] += 1;
    images.push_back(LaurentPolynomial::monomial(y, e));
  }
  return images;
}

LaurentPolynomial covering_pullback(int n) {
  return substitute(build_W_hat(n), covering_map_images(n));
}

long DiscClass::maslov() const { return 2 * std::accumulate(alpha.begin(), alpha.end(), 0L); }

bool DiscClass::spherical() const {
  return !alpha.empty() && std::all_of(alpha.begin(), alpha.end(), [](long a) { return a == 1; });
}

BigInt DiscCountTable::total() const {
  BigInt sum = 0;
  for (const auto& [cls, m] : rows) sum += m;
  return sum;
}

DiscCountTable disc_counts(int n) {
  require_dimension(n);
  DiscCountTable table;
  table.n = n;
  for_each_composition(n + 1, static_cast<std::size_t>(n + 1), [&](const std::vector<long>& alpha) {
    DiscClass cls{alpha};
    table.rows.emplace(cls, cls.spherical() ? BigInt(0) : multinomial(n + 1, alpha));
  });
  return table;
}

LaurentPolynomial reduce_product_relation(const LaurentPolynomial& p) {
  LaurentPolynomial r(p.variables());
  for (const auto& [e, c] : p.terms()) {
    if (e.size() == 0) {
      r.add_term(e, c);
      continue;
    }
    const std::int64_t lowest = *std::min_element(e.entries.begin(), e.entries.end());
    Exponent reduced = e;
    for (auto& v : reduced.entries) v -= lowest;
    r.add_term(reduced, c);
  }
  return r;
}

CountIdentityResult verify_count_identity(int n) {
  const Variables z = z_variables(n);
  const DiscCountTable table = disc_counts(n);

  LaurentPolynomial counts(z);
  for (const auto& [cls, m] : table.rows) {
    Exponent e(std::vector<std::int64_t>(cls.alpha.begin(), cls.alpha.end()));
    counts.add_term(e, Rational(m));
  }

  LaurentPolynomial expansion = variable_sum(z, false).pow(static_cast<unsigned>(n + 1));
  expansion.add_term(Exponent(z->size()), -Rational(factorial(static_cast<unsigned>(n + 1))));

  CountIdentityResult out{false, reduce_product_relation(counts), reduce_product_relation(expansion), LaurentPolynomial(z)};
  out.residual = out.count_side - out.expansion_side;
  out.holds = out.residual.is_zero();
  return out;
}

LaurentPolynomial coordinate_change_pullback(int n) {
  const Variables z = z_variables(n);
  std::vector<LaurentPolynomial> images;
  for (int k = 1; k <= n; ++k) {
    Exponent e(z->size());
    e[static_cast<std::size_t>(k)] = 1;
    e[0] = -1;
    images.push_back(LaurentPolynomial::monomial(z, e));
  }
  return reduce_product_relation(substitute(build_W(n), images));
}

RationalMatrix hessian_at_symmetric_point(int n) {
  const LaurentPolynomial w = build_W_hat(n);
  const std::vector<Rational> ones(static_cast<std::size_t>(n), Rational(1));
  RationalMatrix h(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < h.rows(); ++i) {
    const LaurentPolynomial di = w.derivative(i);
    for (std::size_t j = i; j < h.cols(); ++j) {
      h(i, j) = di.derivative(j).evaluate(ones);
      h(j, i) = h(i, j);
    }
  }
  return h;
}

}  // namespace mirrorkit
