// mirrorkit command-line front end.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "mirrorkit/report.hpp"

using namespace mirrorkit;

namespace {

constexpr int kUsageError = 2;

struct Flags {
  std::string n = "1..3";
  std::string i = "-4..4";
  std::string j = "-4..4";
  double newton_tol = 1e-10;
  double cluster_radius = 1e-8;
  double fd_tol = 1e-6;
  int trials = 100;
  int starts = 64;
  std::uint64_t seed = 0;
  std::string format = "text";
  std::string output;
  bool no_timestamp = false;

  RunConfig to_config() const {
    RunConfig c;
    c.n = parse_range(n);
    c.i = parse_range(i);
    c.j = parse_range(j);
    c.newton_tol = newton_tol;
    c.cluster_radius = cluster_radius;
    c.fd_tol = fd_tol;
    c.trials = trials;
    c.starts = starts;
    c.seed = seed;
    c.format = parse_format(format);
    c.output = output;
    c.timestamp = !no_timestamp;
    c.validate();
    return c;
  }
};

void add_range_flags(CLI::App* cmd, Flags& f) {
  cmd->add_option("--n", f.n, "dimension range A..B or a single value")->capture_default_str();
  cmd->add_option("--i", f.i, "source twist range A..B")->capture_default_str();
  cmd->add_option("--j", f.j, "target twist range A..B")->capture_default_str();
}

void add_output_flags(CLI::App* cmd, Flags& f) {
  cmd->add_option("--format", f.format, "text, json or csv")->capture_default_str();
  cmd->add_option("-o,--output", f.output, "write to this file instead of stdout");
  cmd->add_flag("--no-timestamp", f.no_timestamp, "omit the timestamp from reports");
}

void add_numeric_flags(CLI::App* cmd, Flags& f) {
  cmd->add_option("--trials", f.trials, "rigidity trials per n")->capture_default_str();
  cmd->add_option("--starts", f.starts, "random Newton starts per n")->capture_default_str();
  cmd->add_option("--seed", f.seed, "master seed")->capture_default_str();
  cmd->add_option("--newton-tol", f.newton_tol, "gradient norm tolerance")->capture_default_str();
  cmd->add_option("--cluster-radius", f.cluster_radius, "critical value tolerance")->capture_default_str();
  cmd->add_option("--fd-tol", f.fd_tol, "finite difference tolerance")->capture_default_str();
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << text;
}

void emit_report(const VerificationReport& rep) {
  switch (rep.config.format) {
    case OutputFormat::json: emit(rep.to_json().dump(2) + "\n", rep.config.output); break;
    case OutputFormat::csv: emit(rep.to_csv(), rep.config.output); break;
    case OutputFormat::text: emit(rep.to_text(), rep.config.output); break;
  }
}

int run_verify(const std::string& suite, const Flags& f) {
  const RunConfig c = f.to_config();
  VerificationReport rep;
  if (suite == "superpotential") rep = run_superpotential_suite(c);
  else if (suite == "hms") rep = run_hms_suite(c);
  else if (suite == "discs") rep = run_discs_suite(c);
  else rep = run_full_suite(c);
  emit_report(rep);
  return rep.exit_code();
}

int run_dims(const Flags& f) {
  const RunConfig c = f.to_config();
  Json rows = Json::array();
  std::ostringstream text, csv;
  csv << "n,i,j,a_side,b_side,match\n";
  bool all = true;
  for (long n = c.n.lo; n <= c.n.hi; ++n)
    for (long i = c.i.lo; i <= c.i.hi; ++i)
      for (long j = c.j.lo; j <= c.j.hi; ++j) {
        const DimReport d = a_side_dim(static_cast<int>(n), i, j);
        all &= d.match;
        rows.push_back(to_json(d));
        const char* match = d.match ? "true" : "false";
        text << "n=" << n << " i=" << i << " j=" << j << ": a_side " << d.a_side << ", b_side " << d.b_side
             << ", shift " << d.shift << ", match " << match << '\n';
        csv << n << ',' << i << ',' << j << ',' << d.a_side << ',' << d.b_side << ',' << match << '\n';
      }
  if (c.format == OutputFormat::json) emit(rows.dump(2) + "\n", c.output);
  else if (c.format == OutputFormat::csv) emit(csv.str(), c.output);
  else emit(text.str(), c.output);
  return all ? 0 : 1;
}

int run_psi(int n, long j, const Flags& f) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  const auto parts = psi_decompose(n, j);
  const OutputFormat format = parse_format(f.format);
  if (format == OutputFormat::json) {
    Json out = Json::array();
    for (const auto& t : parts) out.push_back({{"k", t.k}, {"i", t.i}, {"degree", t.mirror_degree(n)}});
    emit(out.dump(2) + "\n", f.output);
    return 0;
  }
  std::ostringstream text;
  for (const auto& t : parts) text << '(' << t.k << ',' << t.i << ") ";
  text << "degrees {";
  for (std::size_t k = 0; k < parts.size(); ++k) text << (k ? "," : "") << parts[k].mirror_degree(n);
  text << "}\n";
  emit(text.str(), f.output);
  return 0;
}

int run_branch(int n, long m, long deg_x, const Flags& f) {
  const BranchDegree b = branch_degree({n, m, deg_x});
  if (parse_format(f.format) == OutputFormat::json) {
    emit(to_json(b).dump(2) + "\n", f.output);
    return 0;
  }
  std::ostringstream text;
  text << "deg B = " << b.degree.get_str() << '\n'
       << "integral: " << (b.integral ? "yes" : "no") << '\n'
       << "divisible by n+1: " << (b.divisible_by_n_plus_1 ? "yes" : "no") << '\n';
  emit(text.str(), f.output);
  return 0;
}

int run_jet_jacobian(int d, const Flags& f) {
  FiniteDifferenceConfig fd;
  fd.tolerance = f.fd_tol;
  const JacobianReport r = jet_jacobian_at_zero(d, fd);
  if (parse_format(f.format) == OutputFormat::json) {
    emit(to_json(r).dump(2) + "\n", f.output);
    return r.regular ? 0 : 1;
  }
  std::ostringstream text;
  text.setf(std::ios::fixed);
  text.precision(6);
  text << "Taylor-coefficient Jacobian of the jet map at lambda = 0, d = " << d << '\n';
  for (const auto& row : r.coefficient_holomorphic) {
    for (const auto& v : row) text << ' ' << std::setw(10) << v.real();
    text << '\n';
  }
  for (int i = 0; i < d; ++i)
    text << "lambda_" << i + 1 << " -> slot " << r.slot[static_cast<std::size_t>(i)] << ", sign "
         << (r.sign[static_cast<std::size_t>(i)] > 0 ? "+1" : "-1") << '\n';
  text.unsetf(std::ios::fixed);
  text << "signed permutation: " << (r.signed_permutation ? "yes" : "no") << '\n'
       << "max antiholomorphic derivative: " << r.max_antiholomorphic << '\n'
       << "richardson step disagreement: " << r.richardson_error << '\n'
       << "|det|: " << std::abs(r.determinant) << '\n'
       << "regular: " << (r.regular ? "yes" : "no") << '\n';
  emit(text.str(), f.output);
  return r.regular ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and numerical checks for the mirror of the degenerate hypersurface t^(n+1) = x0...xn"};
  app.set_config("--config", "", "TOML or INI file with flag defaults");
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolkitVersion);

  Flags flags;
  std::string suite = "all";
  int n_single = 2, d = 3;
  long j_single = 0, m = 1, deg_x = 3;

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite, "superpotential, hms, discs or all")
      ->check(CLI::IsMember({"superpotential", "hms", "discs", "all"}))
      ->capture_default_str();
  add_range_flags(verify, flags);
  add_numeric_flags(verify, flags);
  add_output_flags(verify, flags);

  auto* report = app.add_subcommand("report", "run every suite and write a JSON report");
  add_range_flags(report, flags);
  add_numeric_flags(report, flags);
  add_output_flags(report, flags);

  auto* dims = app.add_subcommand("dims", "A side and B side hom dimensions over an (n, i, j) grid");
  add_range_flags(dims, flags);
  add_output_flags(dims, flags);

  auto* psi = app.add_subcommand("psi", "decompose the preimage of a base thimble");
  psi->add_option("--n", n_single, "dimension")->required();
  psi->add_option("--j", j_single, "winding of the base thimble")->required();
  add_output_flags(psi, flags);

  auto* branch = app.add_subcommand("branch", "degree of the branch divisor");
  branch->add_option("--n", n_single, "dimension")->required();
  branch->add_option("--m", m, "multiple of the anticanonical class")->capture_default_str();
  branch->add_option("--degx", deg_x, "degree of X")->capture_default_str();
  add_output_flags(branch, flags);

  auto* jet = app.add_subcommand("jet-jacobian", "finite-difference Jacobian of the jet map at 0");
  jet->add_option("--d", d, "number of factors")->capture_default_str();
  jet->add_option("--fd-tol", flags.fd_tol, "pattern tolerance")->capture_default_str();
  add_output_flags(jet, flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    if (verify->parsed()) return run_verify(suite, flags);
    if (report->parsed()) {
      if (flags.format == "text") flags.format = "json";
      return run_verify("all", flags);
    }
    if (dims->parsed()) return run_dims(flags);
    if (psi->parsed()) return run_psi(n_single, j_single, flags);
    if (branch->parsed()) return run_branch(n_single, m, deg_x, flags);
    if (jet->parsed()) return run_jet_jacobian(d, flags);
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return kUsageError;
}
