#include "mirrorkit/rational_matrix.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace mirrorkit {

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool RationalMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

namespace {

// Row-reduces in place; returns rank and accumulates the determinant factor.
std::size_t eliminate(RationalMatrix& m, Rational* det) {
  std::size_t rank = 0;
  if (det) *det = 1;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) {
      if (det) *det = 0;
      continue;
    }
    if (pivot != rank) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(pivot, c), m(rank, c));
      if (det) *det = -*det;
    }
    const Rational p = m(rank, col);
    if (det) *det *= p;
    for (std::size_t r = rank + 1; r < m.rows(); ++r) {
      if (m(r, col) == 0) continue;
      const Rational factor = m(r, col) / p;
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= factor * m(rank, c);
    }
    ++rank;
  }
  return rank;
}

}  // namespace

Rational RationalMatrix::determinant() const {
  if (!is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  RationalMatrix work = *this;
  Rational det;
  std::size_t r = eliminate(work, &det);
  return r == rows_ ? det : Rational(0);
}

std::size_t RationalMatrix::rank() const {
  RationalMatrix work = *this;
  return eliminate(work, nullptr);
}

std::string RationalMatrix::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    out << (r ? ", [" : "[");
    for (std::size_t c = 0; c < cols_; ++c) out << (c ? ", " : "") << (*this)(r, c).get_str();
    out << ']';
  }
  out << ']';
  return out.str();
}

}  // namespace mirrorkit
