#include "mirrorkit/clifford.hpp"

#include <bit>
#include <map>
#include <stdexcept>

namespace mirrorkit {

namespace {

using Blade = CliffordAlgebra::Blade;
using Sparse = std::map<Blade, Rational>;

void accumulate(Sparse& into, Blade b, const Rational& c) {
  if (c == 0) return;
  auto& slot = into[b];
  slot += c;
  if (slot == 0) into.erase(b);
}

int highest_generator(Blade b) { return 31 - std::countl_zero(b); }

// e_S * e_k rewritten into ordered blades.  With m = max(S) and S = S' + {m}:
//   m <  k : append
//   m == k : e_S' B(k, k)
//   m >  k : e_S' e_m e_k = -(e_S' e_k) e_m + 2 B(k, m) e_S'
// and every blade of e_S' e_k has generators below m, so "* e_m" appends.
Sparse blade_times_generator(Blade s, int k, const RationalMatrix& form) {
  const Blade gk = Blade{1} << k;
  Sparse out;
  if (s == 0 || highest_generator(s) < k) {
    out[s | gk] = 1;
    return out;
  }
  const int m = highest_generator(s);
  const Blade rest = s & ~(Blade{1} << m);
  const auto ku = static_cast<std::size_t>(k);
  const auto mu = static_cast<std::size_t>(m);
  if (m == k) {
    accumulate(out, rest, form(ku, ku));
    return out;
  }
  for (const auto& [b, c] : blade_times_generator(rest, k, form)) accumulate(out, b | (Blade{1} << m), -c);
  accumulate(out, rest, 2 * form(ku, mu));
  return out;
}

}  // namespace

CliffordAlgebra::CliffordAlgebra(RationalMatrix form) : form_(std::move(form)) {
  for (std::size_t i = 0; i < form_.rows(); ++i)
    for (std::size_t j = 0; j < form_.cols(); ++j) form_(i, j).canonicalize();
  if (!form_.is_symmetric()) throw std::invalid_argument("Clifford form must be symmetric and square");
  if (form_.rows() > 16) throw std::invalid_argument("too many generators for a dense table");
  nondegenerate_ = form_.rows() == 0 || form_.determinant() != 0;

  const std::size_t dim = dimension();
  table_.assign(dim * dim, Element(dim));
  for (Blade a = 0; a < dim; ++a) {
    for (Blade b = 0; b < dim; ++b) {
      Sparse x{{a, Rational(1)}};
      for (int k = 0; k < static_cast<int>(generators()); ++k) {
        if (!(b & (Blade{1} << k))) continue;
        Sparse next;
        for (const auto& [blade, c] : x)
          for (const auto& [nb, nc] : blade_times_generator(blade, k, form_)) accumulate(next, nb, c * nc);
        x = std::move(next);
      }
      Element& slot = table_[a * dim + b];
      for (const auto& [blade, c] : x) slot[blade] = c;
    }
  }
}

CliffordAlgebra::Element CliffordAlgebra::basis(Blade b) const {
  if (b >= dimension()) throw std::out_of_range("basis index");
  Element e(dimension());
  e[b] = 1;
  return e;
}

CliffordAlgebra::Element CliffordAlgebra::multiply(const Element& x, const Element& y) const {
  const std::size_t dim = dimension();
  if (x.size() != dim || y.size() != dim) throw std::invalid_argument("element dimension mismatch");
  Element out(dim);
  for (Blade a = 0; a < dim; ++a) {
    if (x[a] == 0) continue;
    for (Blade b = 0; b < dim; ++b) {
      if (y[b] == 0) continue;
      const Rational c = x[a] * y[b];
      const Element& p = product(a, b);
      for (std::size_t s = 0; s < dim; ++s)
        if (p[s] != 0) out[s] += c * p[s];
    }
  }
  return out;
}

bool CliffordAlgebra::anticommutators_hold() const {
  const std::size_t n = generators();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Blade bi = Blade{1} << i;
      const Blade bj = Blade{1} << j;
      Element sum = product(bi, bj);
      const Element& other = product(bj, bi);
      for (std::size_t s = 0; s < sum.size(); ++s) sum[s] += other[s];
      Element expected(dimension());
      expected[0] = 2 * form_(i, j);
      if (sum != expected) return false;
    }
  return true;
}

bool CliffordAlgebra::triple_associates(Blade a, Blade b, Blade c) const {
  const std::size_t dim = dimension();
  Element left(dim);
  Element right(dim);
  const Element& ab = product(a, b);
  const Element& bc = product(b, c);
  for (Blade s = 0; s < dim; ++s) {
    if (ab[s] != 0) {
      const Element& p = product(s, c);
      for (std::size_t t = 0; t < dim; ++t)
        if (p[t] != 0) left[t] += ab[s] * p[t];
    }
    if (bc[s] != 0) {
      const Element& p = product(a, s);
      for (std::size_t t = 0; t < dim; ++t)
        if (p[t] != 0) right[t] += bc[s] * p[t];
    }
  }
  return left == right;
}

bool CliffordAlgebra::associative() const {
  const auto dim = static_cast<std::ptrdiff_t>(dimension());
  bool ok = true;
#pragma omp parallel for schedule(dynamic) reduction(&& : ok)
  for (std::ptrdiff_t a = 0; a < dim; ++a)
    for (Blade b = 0; b < static_cast<Blade>(dim); ++b)
      for (Blade c = 0; c < static_cast<Blade>(dim); ++c)
        ok = ok && triple_associates(static_cast<Blade>(a), b, c);
  return ok;
}

bool CliffordAlgebra::associative_serial() const {
  const auto dim = static_cast<Blade>(dimension());
  for (Blade a = 0; a < dim; ++a)
    for (Blade b = 0; b < dim; ++b)
      for (Blade c = 0; c < dim; ++c)
        if (!triple_associates(a, b, c)) return false;
  return true;
}

std::string CliffordAlgebra::blade_name(Blade b) {
  if (b == 0) return "1";
  std::string name;
  for (int k = 0; k < 32; ++k)
    if (b & (Blade{1} << k)) name += "e" + std::to_string(k + 1);
  return name;
}

CliffordAlgebra clifford_from_form(const RationalMatrix& form) { return CliffordAlgebra(form); }

}  // namespace mirrorkit
