#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cxosc/verifier.hpp"

namespace cxosc::cli {

/// Exit codes of the cxosc tool.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

inline constexpr int kMaxNMax = 24;
inline constexpr double kMaxTol = 1e-4;
inline constexpr const char* kNMaxEnv = "JORDAN_OSC_NMAX";
inline constexpr const char* kCatalogEnv = "CXOSC_CATALOG";

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Format { json, csv, text };

std::string_view to_string(Format format);
Format parse_format(std::string_view text);

struct RunConfig {
  Mode mode = Mode::exact;
  /// Square roots of a and b. Exact mode reads them as rationals.
  std::string p = "1";
  std::string q = "1/2";
  /// When both are set they take precedence over p, q. Exact mode requires
  /// rational squares.
  std::string a;
  std::string b;
  int n_max = 10;
  double tol = 1e-10;
  std::set<Suite> suites{std::begin(kAllSuites), std::end(kAllSuites)};
  /// "-" writes to stdout.
  std::string out = "-";
  Format format = Format::json;
  std::filesystem::path catalog;
  std::uint64_t seed = 20211;

  VerifyOptions options() const;
};

/// Throws ConfigError when a field is out of range.
void validate(const RunConfig& cfg);

/// Default n_max, honoring JORDAN_OSC_NMAX. Throws ConfigError when the
/// variable is set but malformed.
int default_n_max();

/// CXOSC_CATALOG if set, else the catalog of the build tree, else the one
/// installed next to the executable.
std::filesystem::path default_catalog();

/// "all" or a comma-separated list of suite names.
std::set<Suite> parse_suites(std::string_view text);

/// A full verify run, as serialized to disk.
struct RunReport {
  std::map<std::string, std::string> params;
  Mode mode = Mode::exact;
  std::vector<Report> reports;

  bool passed() const;
  friend bool operator==(const RunReport&, const RunReport&) = default;
};

std::string emit(const RunReport& report, Format format);
/// Inverse of emit(report, Format::json). Throws std::runtime_error on
/// malformed input.
RunReport parse_json_report(std::string_view text);

/// Runs the verify suites for a validated config.
RunReport run_verify(const RunConfig& cfg);

/// Sorted "deg_z deg_zbar coefficient" listing of Psi_{n,m}, preceded by a
/// header line describing the envelope and normalization.
std::string format_basis(const RunConfig& cfg, int n, int m);

/// Gram and H blocks at level n.
std::string format_matrices(const RunConfig& cfg, int n);

/// Entry point shared by the executable and the tests.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cxosc::cli
