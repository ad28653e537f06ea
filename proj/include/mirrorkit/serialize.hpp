#ifndef MIRRORKIT_SERIALIZE_HPP
#define MIRRORKIT_SERIALIZE_HPP

#include <json.hpp>

#include "mirrorkit/coord_ring.hpp"
#include "mirrorkit/critical.hpp"
#include "mirrorkit/disc_numerics.hpp"
#include "mirrorkit/exact_poly.hpp"
#include "mirrorkit/fs_combinatorics.hpp"
#include "mirrorkit/superpotential.hpp"

namespace mirrorkit {

using Json = nlohmann::ordered_json;

// Rationals and big integers travel as decimal strings.
Json to_json(const Rational& q);
Json to_json(const BigInt& z);
Json to_json(const Complex& c);

/// [{"exponent": [...], "num": "...", "den": "..."}, ...] in exponent order.
Json to_json(const LaurentPolynomial& p);
LaurentPolynomial poly_from_json(const Json& j, Variables vars);

Json to_json(const DiscCountTable& t);
Json to_json(const CriticalReport& r);
Json to_json(const RingMonomial& m);
RingMonomial monomial_from_json(int n, const Json& j);
/// Dense (n+1)^2 array of block text forms, row-major.
Json to_json(const BlockMap& m);
Json to_json(const DimReport& r);
Json to_json(const JacobianReport& r);
Json to_json(const RigidityReport& r);
Json to_json(const BranchDegree& b);

}  // namespace mirrorkit

#endif  // MIRRORKIT_SERIALIZE_HPP
