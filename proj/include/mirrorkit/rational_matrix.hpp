#ifndef MIRRORKIT_RATIONAL_MATRIX_HPP
#define MIRRORKIT_RATIONAL_MATRIX_HPP

#include <string>
#include <vector>

#include "mirrorkit/exact_poly.hpp"

namespace mirrorkit {

/// Dense row-major matrix over the rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_square() const { return rows_ == cols_; }
  bool is_symmetric() const;

  /// Exact determinant by Gaussian elimination with nonzero pivoting.
  Rational determinant() const;
  std::size_t rank() const;

  std::string to_string() const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

}  // namespace mirrorkit

#endif  // MIRRORKIT_RATIONAL_MATRIX_HPP
