#include "mirrorkit/serialize.hpp"

namespace mirrorkit {

Json to_json(const Rational& q) { return q.get_str(); }
Json to_json(const BigInt& z) { return z.get_str(); }
Json to_json(const Complex& c) { return Json::array({c.real(), c.imag()}); }

namespace {

Json complex_list(const std::vector<Complex>& v) {
  Json out = Json::array();
  for (const auto& c : v) out.push_back(to_json(c));
  return out;
}

Json complex_matrix(const std::vector<std::vector<Complex>>& m) {
  Json out = Json::array();
  for (const auto& row : m) out.push_back(complex_list(row));
  return out;
}

}  // namespace

Json to_json(const LaurentPolynomial& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.terms())
    out.push_back({{"exponent", e.entries}, {"num", c.get_num().get_str()}, {"den", c.get_den().get_str()}});
  return out;
}

LaurentPolynomial poly_from_json(const Json& j, Variables vars) {
  LaurentPolynomial p(std::move(vars));
  if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array of terms");
  for (const auto& term : j) {
    Exponent e(term.at("exponent").get<std::vector<std::int64_t>>());
    if (e.size() != p.arity()) throw ContextError("exponent length does not match variable count");
    const BigInt den(term.at("den").get<std::string>());
    if (den == 0) throw std::invalid_argument("zero denominator in polynomial JSON");
    Rational c(BigInt(term.at("num").get<std::string>()), den);
    c.canonicalize();
    p.add_term(e, c);
  }
  return p;
}

Json to_json(const DiscCountTable& t) {
  Json rows = Json::array();
  for (const auto& [cls, count] : t.rows)
    rows.push_back({{"alpha", cls.alpha}, {"maslov", cls.maslov()}, {"count", to_json(count)}});
  return {{"n", t.n}, {"rows", rows}, {"total", to_json(t.total())}};
}

Json to_json(const CriticalReport& r) {
  Json points = Json::array();
  for (const auto& p : r.points)
    points.push_back({{"coords", complex_list(p.coords)},
                      {"value_hat", to_json(p.value_hat)},
                      {"value_w", to_json(p.value_w)},
                      {"gradient_norm", p.gradient_norm},
                      {"hessian_eigen_abs", p.hessian_eigen_abs},
                      {"hits", p.hits},
                      {"found_by", to_string(p.found_by)}});
  Json starts = Json::array();
  for (const auto& s : r.starts) {
    Json entry{{"index", s.index},
               {"kind", to_string(s.kind)},
               {"converged", s.converged},
               {"iterations", s.iterations},
               {"gradient_norm", s.gradient_norm}};
    if (!s.note.empty()) entry["note"] = s.note;
    starts.push_back(std::move(entry));
  }
  return {{"n", r.n},
          {"config",
           {{"starts", r.config.starts},
            {"hyperplane_samples", r.config.hyperplane_samples},
            {"seed", r.config.seed},
            {"newton_tol", r.config.newton_tol},
            {"cluster_radius", r.config.cluster_radius},
            {"max_iterations", r.config.max_iterations}}},
          {"symmetric_value", to_json(r.symmetric_value)},
          {"expected_small", to_json(r.expected_small)},
          {"converged", r.converged},
          {"diverged", r.diverged},
          {"points", points},
          {"starts", starts}};
}

Json to_json(const RingMonomial& m) { return {{"t", m.t_exp}, {"x", m.x_exps}}; }

RingMonomial monomial_from_json(int n, const Json& j) {
  return normal_form(n, j.at("t").get<long>(), j.at("x").get<std::vector<long>>());
}

Json to_json(const BlockMap& m) {
  Json rows = Json::array();
  for (std::size_t l = 0; l < m.size(); ++l) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.size(); ++k) row.push_back(m.at(l, k).to_string());
    rows.push_back(std::move(row));
  }
  return {{"n", m.n()}, {"source", m.source()}, {"target", m.target()}, {"blocks", rows}};
}

Json to_json(const DimReport& r) {
  Json blocks = Json::array();
  for (const auto& b : r.blocks) blocks.push_back(to_json(b));
  return {{"n", r.n},         {"i", r.i},          {"j", r.j},          {"a_side", to_json(r.a_side)},
          {"b_side", to_json(r.b_side)}, {"blocks", blocks}, {"shift", r.shift}, {"match", r.match}};
}

Json to_json(const JacobianReport& r) {
  return {{"d", r.d},
          {"holomorphic", complex_matrix(r.holomorphic)},
          {"antiholomorphic", complex_matrix(r.antiholomorphic)},
          {"coefficient_holomorphic", complex_matrix(r.coefficient_holomorphic)},
          {"max_antiholomorphic", r.max_antiholomorphic},
          {"richardson_error", r.richardson_error},
          {"slot", r.slot},
          {"sign", r.sign},
          {"signed_permutation", r.signed_permutation},
          {"antiholomorphic_vanishes", r.antiholomorphic_vanishes},
          {"determinant", to_json(r.determinant)},
          {"regular", r.regular}};
}

Json to_json(const RigidityReport& r) {
  Json trials = Json::array();
  for (const auto& t : r.results) {
    Json entry{{"index", t.index},
               {"seed", t.seed},
               {"converged", t.converged},
               {"iterations", t.iterations},
               {"residual", t.residual},
               {"max_center_modulus", t.max_center_modulus},
               {"pass", t.pass},
               {"start_centers", complex_list(t.start_centers)}};
    if (!t.note.empty()) entry["note"] = t.note;
    trials.push_back(std::move(entry));
  }
  return {{"n", r.n},         {"trials", r.trials}, {"seed", r.seed},
          {"tolerance", r.tolerance}, {"passed", r.passed}, {"results", trials}};
}

Json to_json(const BranchDegree& b) {
  return {{"degree", to_json(b.degree)}, {"integral", b.integral}, {"divisible_by_n_plus_1", b.divisible_by_n_plus_1}};
}

}  // namespace mirrorkit
