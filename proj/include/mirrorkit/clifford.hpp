#ifndef MIRRORKIT_CLIFFORD_HPP
#define MIRRORKIT_CLIFFORD_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "mirrorkit/rational_matrix.hpp"

namespace mirrorkit {

/// Clifford algebra of a symmetric rational bilinear form B on Q^n, with
/// generators subject to e_i e_j + e_j e_i = 2 B(i, j).
///
/// Basis elements are ordered products e_{i1} ... e_{ik} with i1 < ... < ik,
/// indexed by the bitmask of their generators (bit i is e_{i+1}).  Elements
/// are dense coefficient vectors over this basis.
class CliffordAlgebra {
 public:
  using Blade = std::uint32_t;
  using Element = std::vector<Rational>;

  explicit CliffordAlgebra(RationalMatrix form);

  std::size_t generators() const { return form_.rows(); }
  std::size_t dimension() const { return std::size_t{1} << generators(); }
  const RationalMatrix& form() const { return form_; }
  bool nondegenerate() const { return nondegenerate_; }

  /// Stored product of two basis elements.
  const Element& product(Blade a, Blade b) const { return table_[a * dimension() + b]; }
  Element multiply(const Element& x, const Element& y) const;

  Element unit() const { return basis(0); }
  Element basis(Blade b) const;
  Element generator(std::size_t i) const { return basis(Blade{1} << i); }

  /// e_i e_j + e_j e_i == 2 B(i, j) 1 for every generator pair, read off the table.
  bool anticommutators_hold() const;
  /// (e_a e_b) e_c == e_a (e_b e_c) for all basis triples.  OpenMP over a.
  bool associative() const;
  bool associative_serial() const;

  static std::string blade_name(Blade b);

 private:
  bool triple_associates(Blade a, Blade b, Blade c) const;

  RationalMatrix form_;
  bool nondegenerate_ = false;
  std::vector<Element> table_;
};

CliffordAlgebra clifford_from_form(const RationalMatrix& form);

}  // namespace mirrorkit

#endif  // MIRRORKIT_CLIFFORD_HPP
