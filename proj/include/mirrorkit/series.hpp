#ifndef MIRRORKIT_SERIES_HPP
#define MIRRORKIT_SERIES_HPP

#include <complex>
#include <vector>

namespace mirrorkit {

using Complex = std::complex<double>;

/// Power series in z truncated after z^order.
class Series {
 public:
  explicit Series(std::size_t order) : coef_(order + 1) {}
  Series(std::size_t order, std::vector<Complex> coefficients);

  static Series constant(std::size_t order, Complex c);
  /// c * z^k, truncated.
  static Series monomial(std::size_t order, std::size_t k, Complex c = 1.0);

  std::size_t order() const { return coef_.size() - 1; }
  Complex operator[](std::size_t k) const { return coef_[k]; }
  Complex& operator[](std::size_t k) { return coef_[k]; }
  const std::vector<Complex>& coefficients() const { return coef_; }

  Series& operator+=(const Series& o);
  Series& operator-=(const Series& o);
  Series& operator*=(Complex c);
  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator*(Series a, Complex c) { return a *= c; }
  friend Series operator*(const Series& a, const Series& b);

  /// Multiplicative inverse; needs a nonzero constant term.
  Series inverse() const;

  /// (h(0), h'(0), ..., h^(order)(0)).
  std::vector<Complex> derivatives() const;

 private:
  std::vector<Complex> coef_;
};

}  // namespace mirrorkit

#endif  // MIRRORKIT_SERIES_HPP
