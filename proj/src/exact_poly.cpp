#include "mirrorkit/exact_poly.hpp"

#include <omp.h>

#include <numeric>
#include <sstream>

namespace mirrorkit {

Variables make_variables(const std::string& prefix, int first, int last) {
  std::vector<std::string> names;
  for (int k = first; k <= last; ++k) names.push_back(prefix + std::to_string(k));
  return std::make_shared<const std::vector<std::string>>(std::move(names));
}

bool same_variables(const Variables& a, const Variables& b) {
  return a == b || (a && b && *a == *b);
}

Exponent& Exponent::operator+=(const Exponent& o) {
  for (std::size_t i = 0; i < entries.size(); ++i) entries[i] += o.entries[i];
  return *this;
}

Exponent Exponent::scaled(std::int64_t k) const {
  Exponent r = *this;
  for (auto& e : r.entries) e *= k;
  return r;
}

std::int64_t Exponent::total() const {
  return std::accumulate(entries.begin(), entries.end(), std::int64_t{0});
}

bool Exponent::is_zero() const {
  for (auto e : entries)
    if (e != 0) return false;
  return true;
}

LaurentPolynomial::LaurentPolynomial(Variables vars) : vars_(std::move(vars)) {
  if (!vars_) throw ContextError("polynomial needs a variable set");
}

LaurentPolynomial LaurentPolynomial::constant(Variables vars, const Rational& c) {
  LaurentPolynomial p(std::move(vars));
  p.add_term(Exponent(p.arity()), c);
  return p;
}

LaurentPolynomial LaurentPolynomial::monomial(Variables vars, Exponent e, const Rational& c) {
  LaurentPolynomial p(std::move(vars));
  if (e.size() != p.arity()) throw ContextError("exponent length does not match variable count");
  p.add_term(e, c);
  return p;
}

LaurentPolynomial LaurentPolynomial::variable(Variables vars, std::size_t index) {
  Exponent e(vars->size());
  if (index >= e.size()) throw std::out_of_range("variable index");
  e[index] = 1;
  return monomial(std::move(vars), std::move(e));
}

Rational LaurentPolynomial::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational LaurentPolynomial::constant_term() const { return coefficient(Exponent(arity())); }

void LaurentPolynomial::add_term(const Exponent& e, const Rational& c) {
  // mpq_class(a, b) is not reduced on construction; GMP arithmetic needs it reduced.
  Rational q = c;
  q.canonicalize();
  if (q == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, q);
  if (!inserted) {
    it->second += q;
    if (it->second == 0) terms_.erase(it);
  }
}

void LaurentPolynomial::require_same(const LaurentPolynomial& o) const {
  if (!same_variables(vars_, o.vars_)) throw ContextError("polynomials over different variable sets");
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
  require_same(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) {
  require_same(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial r = *this;
  for (auto& [e, v] : r.terms_) v = -v;
  return r;
}

namespace {

// Below this many term pairs the thread startup dominates.
constexpr std::size_t kParallelMulThreshold = 1u << 12;

}  // namespace

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  a.require_same(b);
  if (a.size() * b.size() >= kParallelMulThreshold) return mul_parallel(a, b);
  return mul_serial(a, b);
}

bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  return same_variables(a.vars_, b.vars_) && a.terms_ == b.terms_;
}

LaurentPolynomial mul_serial(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (!same_variables(a.variables(), b.variables()))
    throw ContextError("polynomials over different variable sets");
  LaurentPolynomial r(a.variables());
  for (const auto& [ea, ca] : a.terms())
    for (const auto& [eb, cb] : b.terms()) r.add_term(ea + eb, ca * cb);
  return r;
}

LaurentPolynomial mul_parallel(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (!same_variables(a.variables(), b.variables()))
    throw ContextError("polynomials over different variable sets");
  std::vector<const LaurentPolynomial::Terms::value_type*> left;
  left.reserve(a.size());
  for (const auto& t : a.terms()) left.push_back(&t);

  const int threads = omp_get_max_threads();
  std::vector<LaurentPolynomial> partial(static_cast<std::size_t>(threads), LaurentPolynomial(a.variables()));

#pragma omp parallel num_threads(threads)
  {
    LaurentPolynomial& mine = partial[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(static)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(left.size()); ++i) {
      const auto& [ea, ca] = *left[static_cast<std::size_t>(i)];
      for (const auto& [eb, cb] : b.terms()) mine.add_term(ea + eb, ca * cb);
    }
  }

  LaurentPolynomial r = std::move(partial.front());
  for (std::size_t t = 1; t < partial.size(); ++t) r += partial[t];
  return r;
}

LaurentPolynomial LaurentPolynomial::pow(unsigned k) const {
  LaurentPolynomial result = constant(vars_, 1);
  LaurentPolynomial base = *this;
  while (k > 0) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k > 0) base = base * base;
  }
  return result;
}

LaurentPolynomial LaurentPolynomial::derivative(std::size_t index) const {
  if (index >= arity()) throw std::out_of_range("variable index");
  LaurentPolynomial r(vars_);
  for (const auto& [e, c] : terms_) {
    if (e[index] == 0) continue;
    Exponent shifted = e;
    shifted[index] -= 1;
    r.add_term(shifted, c * Rational(static_cast<long>(e[index])));
  }
  return r;
}

namespace {

Rational rational_power(const Rational& base, std::int64_t k) {
  Rational r;
  if (k >= 0) {
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(k));
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(k));
  } else {
    mpz_pow_ui(r.get_num_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(-k));
    mpz_pow_ui(r.get_den_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(-k));
  }
  r.canonicalize();
  return r;
}

}  // namespace

Rational LaurentPolynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != arity()) throw ContextError("point dimension does not match variable count");
  for (const auto& v : point)
    if (v == 0) throw std::domain_error("Laurent polynomial evaluated at a zero coordinate");
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) term *= rational_power(point[i], e[i]);
    sum += term;
  }
  return sum;
}

std::string LaurentPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational mag = abs(c);
    if (first) {
      out << (c < 0 ? "-" : "");
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    out << mag.get_str();
    bool star = false;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      out << (star ? " " : " * ") << (*vars_)[i] << '^' << e[i];
      star = true;
    }
  }
  return out.str();
}

LaurentPolynomial substitute(const LaurentPolynomial& p, std::span<const LaurentPolynomial> images) {
  if (images.size() != p.arity()) throw ContextError("one image per variable is required");
  if (images.empty()) throw ContextError("substitution needs a target variable set");
  const Variables& target = images.front().variables();
  std::vector<Exponent> image_exp;
  std::vector<Rational> image_coef;
  for (const auto& img : images) {
    if (!same_variables(img.variables(), target)) throw ContextError("images over different variable sets");
    if (!img.is_monomial()) throw UnsupportedSubstitution("substitution images must be Laurent monomials");
    image_exp.push_back(img.terms().begin()->first);
    image_coef.push_back(img.terms().begin()->second);
  }

  LaurentPolynomial r(target);
  for (const auto& [e, c] : p.terms()) {
    Exponent out(target->size());
    Rational coef = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      out += image_exp[i].scaled(e[i]);
      coef *= rational_power(image_coef[i], e[i]);
    }
    r.add_term(out, coef);
  }
  return r;
}

BigInt factorial(unsigned k) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), k);
  return r;
}

BigInt binomial(long top, long k) {
  if (top < 0 || k < 0 || k > top) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(top), static_cast<unsigned long>(k));
  return r;
}

BigInt multinomial(long top, std::span<const long> parts) {
  long sum = 0;
  for (long p : parts) {
    if (p < 0) throw std::invalid_argument("multinomial: negative part");
    sum += p;
  }
  if (sum != top) throw std::invalid_argument("multinomial: parts must sum to top");
  BigInt r = 1;
  long seen = 0;
  // Product of binomials keeps intermediates exact and small.
  for (long p : parts) {
    seen += p;
    r *= binomial(seen, p);
  }
  return r;
}

}  // namespace mirrorkit
