#ifndef MIRRORKIT_REPORT_HPP
#define MIRRORKIT_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "mirrorkit/serialize.hpp"

namespace mirrorkit {

inline constexpr const char* kToolkitVersion = "1.0.0";

struct IntRange {
  long lo = 0;
  long hi = 0;

  bool empty() const { return lo > hi; }
  std::string to_string() const;
};

/// Parses "A..B" or a single integer "A".  Throws std::invalid_argument.
IntRange parse_range(const std::string& text);

enum class OutputFormat { text, json, csv };
OutputFormat parse_format(const std::string& text);
const char* to_string(OutputFormat f);

struct RunConfig {
  IntRange n{1, 3};
  IntRange i{-4, 4};
  IntRange j{-4, 4};
  double newton_tol = 1e-10;
  double cluster_radius = 1e-8;  ///< also the tolerance on critical values
  double fd_tol = 1e-6;
  int trials = 100;
  int starts = 64;
  std::uint64_t seed = 0;
  OutputFormat format = OutputFormat::text;
  std::string output;  ///< empty means stdout
  bool timestamp = true;

  /// Throws std::invalid_argument on empty ranges, non-positive tolerances
  /// or negative counts.
  void validate() const;
  Json to_json() const;
};

enum class Status { pass, fail, skip };
const char* to_string(Status s);

struct CheckRecord {
  std::string id;
  Json params;
  Status status = Status::pass;
  Json details;
};

struct VerificationReport {
  std::string version = kToolkitVersion;
  RunConfig config;
  std::vector<CheckRecord> records;
  std::string timestamp;  ///< empty when suppressed

  int count(Status s) const;
  bool ok() const { return count(Status::fail) == 0; }
  int exit_code() const { return ok() ? 0 : 1; }

  void append(VerificationReport&& other);
  Json to_json() const;
  std::string to_text() const;
  /// Dimension grid rows (hms.dims records) as n,i,j,a_side,b_side,match.
  std::string to_csv() const;
};

/// Build, pullback, count identity, critical values, Hessian and Clifford checks over config.n.
VerificationReport run_superpotential_suite(const RunConfig& config);
/// Dimension grid, psi-decomposition multisets, chord dictionary and pushforward checks.
VerificationReport run_hms_suite(const RunConfig& config);
/// Blaschke, jet, Jacobian, rigidity, branch degree, Maslov and assembly checks.
VerificationReport run_discs_suite(const RunConfig& config);
VerificationReport run_full_suite(const RunConfig& config);

/// UTC time as ISO 8601.
std::string utc_timestamp();

}  // namespace mirrorkit

#endif  // MIRRORKIT_REPORT_HPP
