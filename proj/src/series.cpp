#include "mirrorkit/series.hpp"

#include <stdexcept>

namespace mirrorkit {

Series::Series(std::size_t order, std::vector<Complex> coefficients) : coef_(std::move(coefficients)) {
  coef_.resize(order + 1);
}

Series Series::constant(std::size_t order, Complex c) {
  Series s(order);
  s.coef_[0] = c;
  return s;
}

Series Series::monomial(std::size_t order, std::size_t k, Complex c) {
  Series s(order);
  if (k <= order) s.coef_[k] = c;
  return s;
}

Series& Series::operator+=(const Series& o) {
  if (o.order() != order()) throw std::invalid_argument("series orders differ");
  for (std::size_t k = 0; k < coef_.size(); ++k) coef_[k] += o.coef_[k];
  return *this;
}

Series& Series::operator-=(const Series& o) {
  if (o.order() != order()) throw std::invalid_argument("series orders differ");
  for (std::size_t k = 0; k < coef_.size(); ++k) coef_[k] -= o.coef_[k];
  return *this;
}

Series& Series::operator*=(Complex c) {
  for (auto& v : coef_) v *= c;
  return *this;
}

Series operator*(const Series& a, const Series& b) {
  if (a.order() != b.order()) throw std::invalid_argument("series orders differ");
  Series r(a.order());
  for (std::size_t i = 0; i <= a.order(); ++i) {
    if (a.coef_[i] == Complex(0)) continue;
    for (std::size_t j = 0; i + j <= a.order(); ++j) r.coef_[i + j] += a.coef_[i] * b.coef_[j];
  }
  return r;
}

Series Series::inverse() const {
  if (coef_[0] == Complex(0)) throw std::domain_error("series with zero constant term is not invertible");
  Series r(order());
  r.coef_[0] = 1.0 / coef_[0];
  for (std::size_t k = 1; k <= order(); ++k) {
    Complex acc = 0;
    for (std::size_t j = 1; j <= k; ++j) acc += coef_[j] * r.coef_[k - j];
    r.coef_[k] = -acc * r.coef_[0];
  }
  return r;
}

std::vector<Complex> Series::derivatives() const {
  std::vector<Complex> d(coef_.size());
  double fact = 1.0;
  for (std::size_t k = 0; k < coef_.size(); ++k) {
    if (k > 0) fact *= static_cast<double>(k);
    d[k] = coef_[k] * fact;
  }
  return d;
}

}  // namespace mirrorkit
