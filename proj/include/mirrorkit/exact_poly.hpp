#ifndef MIRRORKIT_EXACT_POLY_HPP
#define MIRRORKIT_EXACT_POLY_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace mirrorkit {

using Rational = mpq_class;
using BigInt = mpz_class;

/// Raised when two polynomials over different variable sets are combined.
class ContextError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised by substitute() when an image is not a single Laurent monomial.
class UnsupportedSubstitution : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Ordered list of variable names shared by every polynomial over it.
using Variables = std::shared_ptr<const std::vector<std::string>>;

/// Variables named `prefix<first>`, ..., `prefix<last>`.
Variables make_variables(const std::string& prefix, int first, int last);

bool same_variables(const Variables& a, const Variables& b);

/// Signed exponent vector of a Laurent monomial.  Ordered lexicographically.
struct Exponent {
  std::vector<std::int64_t> entries;

  Exponent() = default;
  explicit Exponent(std::size_t arity) : entries(arity, 0) {}
  explicit Exponent(std::vector<std::int64_t> e) : entries(std::move(e)) {}

  std::size_t size() const { return entries.size(); }
  std::int64_t operator[](std::size_t i) const { return entries[i]; }
  std::int64_t& operator[](std::size_t i) { return entries[i]; }

  Exponent& operator+=(const Exponent& o);
  friend Exponent operator+(Exponent a, const Exponent& b) { return a += b; }
  Exponent scaled(std::int64_t k) const;

  std::int64_t total() const;
  bool is_zero() const;

  auto operator<=>(const Exponent&) const = default;
  bool operator==(const Exponent&) const = default;
};

/// Finite sum of rational multiples of Laurent monomials.  No stored
/// coefficient is ever zero, so equality is termwise.
class LaurentPolynomial {
 public:
  using Terms = std::map<Exponent, Rational>;

  explicit LaurentPolynomial(Variables vars);

  static LaurentPolynomial constant(Variables vars, const Rational& c);
  static LaurentPolynomial monomial(Variables vars, Exponent e, const Rational& c = 1);
  static LaurentPolynomial variable(Variables vars, std::size_t index);

  const Variables& variables() const { return vars_; }
  std::size_t arity() const { return vars_->size(); }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }

  Rational coefficient(const Exponent& e) const;
  /// Coefficient of the monomial with exponent zero.
  Rational constant_term() const;

  /// Accumulates c * x^e, erasing the term if it cancels.
  void add_term(const Exponent& e, const Rational& c);

  LaurentPolynomial& operator+=(const LaurentPolynomial& o);
  LaurentPolynomial& operator-=(const LaurentPolynomial& o);
  LaurentPolynomial& operator*=(const Rational& c);
  LaurentPolynomial operator-() const;

  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(LaurentPolynomial a, const Rational& c) { return a *= c; }
  friend LaurentPolynomial operator*(const Rational& c, LaurentPolynomial a) { return a *= c; }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);

  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b);

  /// Nonnegative power by repeated squaring.
  LaurentPolynomial pow(unsigned k) const;

  /// Exact partial derivative with respect to variable `index`.
  LaurentPolynomial derivative(std::size_t index) const;

  /// Value at a point with all coordinates nonzero.
  Rational evaluate(std::span<const Rational> point) const;

  /// Canonical text form, terms in increasing lexicographic exponent order.
  std::string to_string() const;

 private:
  void require_same(const LaurentPolynomial& o) const;

  Variables vars_;
  Terms terms_;
};

/// Single-threaded product; the reference for the parallel kernel.
LaurentPolynomial mul_serial(const LaurentPolynomial& a, const LaurentPolynomial& b);
/// OpenMP product: each thread accumulates a slice of `a` into its own map.
LaurentPolynomial mul_parallel(const LaurentPolynomial& a, const LaurentPolynomial& b);

/// Replaces variable k of `p` by images[k].  Every image must be a single
/// Laurent monomial, and all images must share one variable set (the target).
LaurentPolynomial substitute(const LaurentPolynomial& p, std::span<const LaurentPolynomial> images);

// Combinatorics over big integers.

BigInt factorial(unsigned k);
/// C(top, k); zero outside 0 <= k <= top (and for negative top).
BigInt binomial(long top, long k);
/// top! / prod(parts_i!).  Throws std::invalid_argument unless the parts are
/// nonnegative and sum to `top`.
BigInt multinomial(long top, std::span<const long> parts);

/// Calls fn(parts) for every vector of `count` nonnegative integers summing
/// to `total`, in lexicographically decreasing order of parts.
template <class Fn>
void for_each_composition(long total, std::size_t count, Fn&& fn);

}  // namespace mirrorkit

#include "mirrorkit/detail/compositions.hpp"

#endif  // MIRRORKIT_EXACT_POLY_HPP
