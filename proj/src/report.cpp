#include "mirrorkit/report.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <ctime>
#include <numbers>
#include <set>
#include <sstream>

#include "mirrorkit/clifford.hpp"
#include "mirrorkit/rng.hpp"

namespace mirrorkit {

std::string IntRange::to_string() const {
  return lo == hi ? std::to_string(lo) : std::to_string(lo) + ".." + std::to_string(hi);
}

namespace {

long parse_long(std::string_view s, const std::string& whole) {
  long v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw std::invalid_argument("malformed range '" + whole + "', expected A..B");
  return v;
}

}  // namespace

IntRange parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const long v = parse_long(text, text);
    return {v, v};
  }
  const std::string_view view(text);
  IntRange r{parse_long(view.substr(0, dots), text), parse_long(view.substr(dots + 2), text)};
  if (r.empty()) throw std::invalid_argument("empty range '" + text + "'");
  return r;
}

OutputFormat parse_format(const std::string& text) {
  if (text == "text") return OutputFormat::text;
  if (text == "json") return OutputFormat::json;
  if (text == "csv") return OutputFormat::csv;
  throw std::invalid_argument("unknown format '" + text + "' (text, json, csv)");
}

const char* to_string(OutputFormat f) {
  switch (f) {
    case OutputFormat::text: return "text";
    case OutputFormat::json: return "json";
    case OutputFormat::csv: return "csv";
  }
  return "text";
}

void RunConfig::validate() const {
  if (n.empty() || i.empty() || j.empty()) throw std::invalid_argument("ranges must be nonempty");
  if (n.lo < 1) throw std::invalid_argument("n range must start at 1 or above");
  if (!(newton_tol > 0) || !(cluster_radius > 0) || !(fd_tol > 0))
    throw std::invalid_argument("tolerances must be positive");
  if (trials < 0 || starts < 0) throw std::invalid_argument("trial and start counts must be nonnegative");
}

Json RunConfig::to_json() const {
  return {{"n", n.to_string()},
          {"i", i.to_string()},
          {"j", j.to_string()},
          {"newton_tol", newton_tol},
          {"cluster_radius", cluster_radius},
          {"fd_tol", fd_tol},
          {"trials", trials},
          {"starts", starts},
          {"seed", seed}};
}

const char* to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skip: return "skip";
  }
  return "fail";
}

int VerificationReport::count(Status s) const {
  return static_cast<int>(std::count_if(records.begin(), records.end(), [s](const CheckRecord& r) { return r.status == s; }));
}

void VerificationReport::append(VerificationReport&& other) {
  for (auto& r : other.records) records.push_back(std::move(r));
}

Json VerificationReport::to_json() const {
  Json recs = Json::array();
  for (const auto& r : records)
    recs.push_back({{"id", r.id}, {"params", r.params}, {"status", to_string(r.status)}, {"details", r.details}});
  Json out{{"toolkit", "mirrorkit"}, {"version", version}, {"config", config.to_json()}};
  if (!timestamp.empty()) out["timestamp"] = timestamp;
  out["records"] = recs;
  out["summary"] = {{"total", records.size()},
                    {"pass", count(Status::pass)},
                    {"fail", count(Status::fail)},
                    {"skip", count(Status::skip)}};
  return out;
}

std::string VerificationReport::to_text() const {
  std::ostringstream out;
  for (const auto& r : records) {
    std::string tag = to_string(r.status);
    std::transform(tag.begin(), tag.end(), tag.begin(), ::toupper);
    out << '[' << tag << "] " << r.id << ' ' << r.params.dump();
    if (r.details.contains("summary")) out << "  " << r.details["summary"].get<std::string>();
    out << '\n';
  }
  out << "total " << records.size() << ", pass " << count(Status::pass) << ", fail " << count(Status::fail)
      << ", skip " << count(Status::skip) << '\n';
  return out.str();
}

std::string VerificationReport::to_csv() const {
  std::ostringstream out;
  out << "n,i,j,a_side,b_side,match\n";
  for (const auto& r : records) {
    if (r.id != "hms.dims") continue;
    const auto& d = r.details;
    out << d["n"].get<int>() << ',' << d["i"].get<long>() << ',' << d["j"].get<long>() << ','
        << d["a_side"].get<std::string>() << ',' << d["b_side"].get<std::string>() << ','
        << (d["match"].get<bool>() ? "true" : "false") << '\n';
  }
  return out.str();
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

namespace {

Status status_of(bool ok) { return ok ? Status::pass : Status::fail; }

CheckRecord record(std::string id, Json params, bool ok, Json details) {
  return {std::move(id), std::move(params), status_of(ok), std::move(details)};
}

VerificationReport start(const RunConfig& config) {
  config.validate();
  VerificationReport rep;
  rep.config = config;
  if (config.timestamp) rep.timestamp = utc_timestamp();
  return rep;
}

BigInt power(long base, long exp) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(exp));
  return r;
}

// Largest Clifford algebra built in a sweep; 2^n basis elements with a dense table.
constexpr long kMaxCliffordN = 8;

void superpotential_checks(int n, const RunConfig& config, VerificationReport& rep) {
  const Json p{{"n", n}};
  const BigInt shift = factorial(static_cast<unsigned>(n + 1));

  {
    const auto w = build_W(n);
    const auto w_hat = build_W_hat(n);
    const auto diff = w_hat - w;
    const bool ok = diff == LaurentPolynomial::constant(w.variables(), Rational(shift));
    rep.records.push_back(record("superpotential.build", p, ok,
                                 {{"summary", "W_hat - W = " + diff.to_string()},
                                  {"W_terms", w.size()},
                                  {"W_cl", to_json(build_W_cl(n))}}));
  }
  {
    const auto lhs = covering_pullback(n);
    const auto rhs = build_W_cl(n).pow(static_cast<unsigned>(n + 1));
    const auto residual = lhs - rhs;
    rep.records.push_back(record("superpotential.pullback", p, residual.is_zero(),
                                 {{"summary", "residual " + residual.to_string()},
                                  {"terms", lhs.size()},
                                  {"residual", to_json(residual)}}));
  }
  {
    const auto id = verify_count_identity(n);
    const auto table = disc_counts(n);
    const BigInt spherical = table.rows.at(DiscClass{std::vector<long>(static_cast<std::size_t>(n + 1), 1)});
    const BigInt expected_total = power(n + 1, n + 1) - shift;
    const bool ok = id.holds && spherical == 0 && table.total() == expected_total;
    rep.records.push_back(record("superpotential.count_identity", p, ok,
                                 {{"summary", "residual " + id.residual.to_string() + ", spherical count " +
                                                  spherical.get_str() + ", total " + table.total().get_str()},
                                  {"residual", to_json(id.residual)},
                                  {"spherical_count", to_json(spherical)},
                                  {"table", to_json(table)}}));
    const auto residual = coordinate_change_pullback(n) - id.count_side;
    rep.records.push_back(record("superpotential.coordinate_change", p, residual.is_zero(),
                                 {{"summary", "residual " + residual.to_string()}, {"residual", to_json(residual)}}));
  }
  {
    SolverConfig sc;
    sc.starts = config.starts;
    sc.seed = config.seed;
    sc.newton_tol = config.newton_tol;
    sc.cluster_radius = config.cluster_radius;
    const auto cr = critical_points(n, sc);
    const double big = cr.expected_small.get_d();
    bool found_zero = false, found_big = false, all_known = true, all_small_gradient = true;
    Json values = Json::array();
    for (const auto& pt : cr.points) {
      const bool at_zero = std::abs(pt.value_hat) <= config.cluster_radius;
      const bool at_big = std::abs(pt.value_hat - Complex(big, 0)) <= config.cluster_radius;
      found_zero |= at_zero;
      found_big |= at_big;
      all_known &= at_zero || at_big;
      all_small_gradient &= pt.gradient_norm < config.newton_tol;
      values.push_back(to_json(pt.value_hat));
    }
    const bool exact = cr.symmetric_value == cr.expected_small;
    const bool ok = found_zero && found_big && all_known && all_small_gradient && exact;
    std::ostringstream summary;
    summary << cr.points.size() << " critical values, symmetric value " << cr.symmetric_value.get_str()
            << (exact ? " (exact)" : " (mismatch)") << ", converged " << cr.converged << "/"
            << cr.converged + cr.diverged;
    rep.records.push_back(record("superpotential.critical", Json{{"n", n}, {"seed", config.seed}}, ok,
                                 {{"summary", summary.str()}, {"values_hat", values}, {"report", to_json(cr)}}));
  }
  const RationalMatrix hessian = hessian_at_symmetric_point(n);
  {
    const Rational det = hessian.determinant();
    rep.records.push_back(record("superpotential.hessian", p, det != 0 && hessian.is_symmetric(),
                                 {{"summary", "det " + det.get_str()},
                                  {"determinant", to_json(det)},
                                  {"matrix", hessian.to_string()}}));
  }
  if (n > kMaxCliffordN) {
    rep.records.push_back({"superpotential.clifford", p, Status::skip,
                           {{"summary", "more than " + std::to_string(kMaxCliffordN) + " generators"}}});
  } else {
    const CliffordAlgebra cl = clifford_from_form(hessian);
    const bool anti = cl.anticommutators_hold();
    const bool assoc = cl.associative();
    rep.records.push_back(record("superpotential.clifford", p, anti && assoc && cl.nondegenerate(),
                                 {{"summary", "dimension " + std::to_string(cl.dimension()) +
                                                  (anti ? ", anticommutators hold" : ", anticommutators fail") +
                                                  (assoc ? ", associative" : ", not associative")},
                                  {"dimension", cl.dimension()},
                                  {"anticommutators", anti},
                                  {"associative", assoc},
                                  {"nondegenerate", cl.nondegenerate()}}));
  }
}

// Highest degree covered by the chord dictionary sweep.
constexpr long kChordDegrees = 6;

void hms_checks(int n, const RunConfig& config, VerificationReport& rep) {
  for (long i = config.i.lo; i <= config.i.hi; ++i)
    for (long j = config.j.lo; j <= config.j.hi; ++j) {
      const DimReport d = a_side_dim(n, i, j);
      Json details = to_json(d);
      details["summary"] = "a_side " + d.a_side.get_str() + ", b_side " + d.b_side.get_str();
      rep.records.push_back(record("hms.dims", Json{{"n", n}, {"i", i}, {"j", j}}, d.match, std::move(details)));
    }

  for (long j = config.j.lo; j <= config.j.hi; ++j) {
    std::multiset<long> degrees, expected;
    Json parts = Json::array();
    for (const auto& t : psi_decompose(n, j)) {
      degrees.insert(t.mirror_degree(n));
      parts.push_back(Json::array({t.k, t.i}));
    }
    for (long k = 0; k <= n; ++k) expected.insert(j - k);
    rep.records.push_back(record("hms.psi", Json{{"n", n}, {"j", j}}, degrees == expected,
                                 {{"thimbles", parts}, {"degrees", std::vector<long>(degrees.begin(), degrees.end())}}));
  }

  {
    const GradingGroup group(n);
    bool ok = true;
    std::size_t checked = 0;
    for (long d = 0; d <= kChordDegrees; ++d) {
      std::set<ToricDegree> tags;
      for (const auto& m : graded_basis(n, d)) {
        const ToricDegree v = toric_degree(m);
        ok &= tags.insert(v).second;
        const auto back = chord_to_monomial(n, group.lift(v), d);
        ok &= back.has_value() && *back == m;
        ++checked;
      }
      ok &= BigInt(static_cast<unsigned long>(tags.size())) == graded_dim(n, d);
    }
    rep.records.push_back(record("hms.chords", Json{{"n", n}, {"degrees", "0.." + std::to_string(kChordDegrees)}}, ok,
                                 {{"summary", std::to_string(checked) + " monomials"}, {"monomials", checked}}));
  }

  {
    const auto f = product_polynomial(n);
    BlockMap acc = pushforward_of_t(n, f, 0);
    for (long s = 1; s <= n; ++s) acc = compose(pushforward_of_t(n, f, s), acc);
    const bool ok = acc == BlockMap::diagonal(n, 0, f, n + 1) && acc.degrees_consistent();
    rep.records.push_back(record("hms.pushforward", Json{{"n", n}}, ok, {{"composite", to_json(acc)}}));
  }
}

Complex random_phase(Rng& rng) { return std::polar(1.0, rng.uniform(0.0, 2.0 * std::numbers::pi)); }

BlaschkeProduct random_blaschke(Rng& rng, std::size_t degree) {
  std::vector<Complex> centers;
  for (std::size_t k = 0; k < degree; ++k) centers.push_back(rng.in_disc(0.9));
  return BlaschkeProduct(random_phase(rng), std::move(centers));
}

// Derivatives at 0 from the trapezoid rule on |z| = r; exponentially accurate.
std::vector<Complex> cauchy_jet(const BlaschkeProduct& b, std::size_t order) {
  constexpr int samples = 512;
  constexpr double r = 0.5;
  std::vector<Complex> out(order + 1, 0.0);
  for (int s = 0; s < samples; ++s) {
    const double theta = 2.0 * std::numbers::pi * s / samples;
    const Complex value = b(std::polar(r, theta));
    for (std::size_t k = 0; k <= order; ++k)
      out[k] += value * std::polar(1.0, -static_cast<double>(k) * theta);
  }
  double fact = 1.0;
  for (std::size_t k = 0; k <= order; ++k) {
    if (k > 0) fact *= static_cast<double>(k);
    out[k] *= fact / (samples * std::pow(r, static_cast<double>(k)));
  }
  return out;
}

void discs_checks(int n, const RunConfig& config, VerificationReport& rep) {
  const Json p{{"n", n}};
  const auto degree = static_cast<std::size_t>(n + 1);
  // Distinct streams per check so adding a check leaves the others unchanged.
  Rng rng(derive_seed(config.seed, 0x1000u + static_cast<std::uint64_t>(n)));

  {
    double worst = 0.0;
    for (int s = 0; s < 1000; ++s) {
      const auto b = random_blaschke(rng, 1 + static_cast<std::size_t>(s) % degree);
      worst = std::max(worst, std::abs(std::abs(b(random_phase(rng))) - 1.0));
    }
    bool additive = true;
    for (int s = 0; s < 20; ++s) {
      const auto a = random_blaschke(rng, degree);
      const auto b = random_blaschke(rng, 1 + static_cast<std::size_t>(s) % degree);
      additive &= boundary_winding(a * b) == static_cast<long>(a.degree() + b.degree()) &&
                  boundary_winding(a) == static_cast<long>(a.degree());
    }
    std::ostringstream summary;
    summary << "max boundary deviation " << worst << (additive ? ", windings additive" : ", winding mismatch");
    rep.records.push_back(record("discs.blaschke", p, worst <= 1e-10 && additive,
                                 {{"summary", summary.str()}, {"max_boundary_deviation", worst}, {"additive", additive}}));
  }
  {
    const BlaschkeProduct power(1.0, std::vector<Complex>(degree, 0.0));
    const auto jet = blaschke_jet(power, static_cast<std::size_t>(n));
    bool vanishes = std::all_of(jet.entries.begin(), jet.entries.end(), [](Complex c) { return c == 0.0; });
    double worst = 0.0;
    for (int s = 0; s < 10; ++s) {
      const auto b = random_blaschke(rng, degree);
      const auto series_jet = blaschke_jet(b, static_cast<std::size_t>(n)).entries;
      const auto oracle = cauchy_jet(b, static_cast<std::size_t>(n));
      for (std::size_t k = 0; k < series_jet.size(); ++k)
        worst = std::max(worst, std::abs(series_jet[k] - oracle[k]) / std::max(1.0, std::abs(oracle[k])));
    }
    std::ostringstream summary;
    summary << (vanishes ? "z^(n+1) jet vanishes" : "z^(n+1) jet nonzero") << ", max deviation from contour integral "
            << worst;
    rep.records.push_back(record("discs.jet", p, vanishes && worst <= config.fd_tol,
                                 {{"summary", summary.str()}, {"power_jet_vanishes", vanishes}, {"max_deviation", worst}}));
  }
  for (int d = 1; d <= n + 1; ++d) {
    FiniteDifferenceConfig fd;
    fd.tolerance = config.fd_tol;
    try {
      const auto jr = jet_jacobian_at_zero(d, fd);
      Json details = to_json(jr);
      std::ostringstream summary;
      summary << (jr.signed_permutation ? "signed permutation" : "no signed permutation") << ", max antiholomorphic "
              << jr.max_antiholomorphic << ", |det| " << std::abs(jr.determinant);
      details["summary"] = summary.str();
      rep.records.push_back(record("discs.jacobian", Json{{"n", n}, {"d", d}}, jr.regular, std::move(details)));
    } catch (const NumericalError& e) {
      rep.records.push_back(record("discs.jacobian", Json{{"n", n}, {"d", d}}, false, {{"summary", e.what()}}));
    }
  }
  {
    const auto rr = spherical_rigidity_check(n, config.trials, config.seed);
    double worst = 0.0;
    for (const auto& t : rr.results) worst = std::max(worst, t.max_center_modulus);
    Json details = to_json(rr);
    std::ostringstream summary;
    summary << rr.passed << "/" << rr.trials << " trials recover centers at 0, max modulus " << worst;
    details["summary"] = summary.str();
    rep.records.push_back(record("discs.rigidity", Json{{"n", n}, {"trials", config.trials}, {"seed", config.seed}},
                                 rr.all_pass(), std::move(details)));
  }
  {
    const auto b = branch_degree({n, 1, n + 1});
    const bool ok = b.integral && b.divisible_by_n_plus_1 && b.degree == Rational(n * (n + 1));
    Json details = to_json(b);
    details["summary"] = "deg B = " + b.degree.get_str();
    rep.records.push_back(record("discs.branch", Json{{"n", n}, {"m", 1}, {"deg_x", n + 1}}, ok, std::move(details)));
  }
  {
    const Rational mu(2 * (n + 1));
    const Rational deg_b(n * (n + 1));
    const bool untouched = maslov_in_cover(n, 1, deg_b, mu, 0) == mu;
    const Rational tangent = maslov_in_cover(n, 1, deg_b, mu, deg_b);
    bool slope = true;
    for (long m = 1; m <= 3; ++m)
      for (long v = 1; v <= 4; ++v) {
        const Rational db = branch_degree({n, m, n + 1}).degree;
        const Rational base = Rational(2 * (n + 1) * v) / db;
        slope &= maslov_in_cover(n, m, db, base, v) == Rational(2 * v) / (Rational(m) * db);
      }
    const bool ok = untouched && tangent == 2 && slope;
    rep.records.push_back(record("discs.maslov", p, ok,
                                 {{"summary", "tangent lift Maslov " + tangent.get_str()},
                                  {"untouched", untouched},
                                  {"tangent_lift", to_json(tangent)},
                                  {"slope_identity", slope}}));
  }
  if (n > 4) {
    rep.records.push_back({"discs.assembly", p, Status::skip, {{"summary", "enumeration limited to n <= 4"}}});
  } else {
    bool ok = true;
    std::size_t classes = 0;
    for_each_composition(n + 1, degree, [&](const std::vector<long>& alpha) {
      ok &= assembly_count(alpha) == multinomial(n + 1, alpha);
      ++classes;
    });
    rep.records.push_back(record("discs.assembly", p, ok, {{"summary", std::to_string(classes) + " classes"}, {"classes", classes}}));
  }
}

}  // namespace

VerificationReport run_superpotential_suite(const RunConfig& config) {
  VerificationReport rep = start(config);
  for (long n = config.n.lo; n <= config.n.hi; ++n) superpotential_checks(static_cast<int>(n), config, rep);
  return rep;
}

VerificationReport run_hms_suite(const RunConfig& config) {
  VerificationReport rep = start(config);
  for (long n = config.n.lo; n <= config.n.hi; ++n) hms_checks(static_cast<int>(n), config, rep);
  return rep;
}

VerificationReport run_discs_suite(const RunConfig& config) {
  VerificationReport rep = start(config);
  for (long n = config.n.lo; n <= config.n.hi; ++n) discs_checks(static_cast<int>(n), config, rep);
  return rep;
}

VerificationReport run_full_suite(const RunConfig& config) {
  VerificationReport rep = run_superpotential_suite(config);
  rep.append(run_hms_suite(config));
  rep.append(run_discs_suite(config));
  return rep;
}

}  // namespace mirrorkit
