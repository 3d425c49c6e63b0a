#include "cxosc/cli.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "cxosc/basis.hpp"
#include "cxosc/gaussint.hpp"
#include "json.hpp"

#ifndef CXOSC_DEFAULT_CATALOG
#define CXOSC_DEFAULT_CATALOG "relations.rel"
#endif

namespace cxosc::cli {

using nlohmann::json;
using cxosc::to_string;

std::string_view to_string(Format format) {
  switch (format) {
    case Format::json:
      return "json";
    case Format::csv:
      return "csv";
    case Format::text:
      return "text";
  }
  return "?";
}

Format parse_format(std::string_view text) {
  for (Format f : {Format::json, Format::csv, Format::text}) {
    if (to_string(f) == text) return f;
  }
  throw ConfigError(fmt::format("unknown format '{}' (expected json, csv or text)", text));
}

VerifyOptions RunConfig::options() const {
  VerifyOptions o;
  o.n_max = n_max;
  o.tol = tol;
  o.seed = seed;
  return o;
}

void validate(const RunConfig& cfg) {
  if (cfg.n_max < 1 || cfg.n_max > kMaxNMax) {
    throw ConfigError(fmt::format("n_max must lie in [1, {}], got {}", kMaxNMax, cfg.n_max));
  }
  if (!(cfg.tol > 0.0 && cfg.tol <= kMaxTol)) {
    throw ConfigError(fmt::format("tol must lie in (0, {}], got {}", kMaxTol, cfg.tol));
  }
  if (cfg.suites.empty()) throw ConfigError("no suites selected");
  if (cfg.a.empty() != cfg.b.empty()) throw ConfigError("--a and --b must be given together");
}

int default_n_max() {
  const char* env = std::getenv(kNMaxEnv);
  if (env == nullptr || *env == '\0') return RunConfig{}.n_max;
  std::string_view text(env);
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ConfigError(fmt::format("{} must be an integer, got '{}'", kNMaxEnv, text));
  }
  return value;
}

std::filesystem::path default_catalog() {
  const char* env = std::getenv(kCatalogEnv);
  if (env != nullptr && *env != '\0') return env;
  const std::filesystem::path built = CXOSC_DEFAULT_CATALOG;
  if (std::filesystem::exists(built)) return built;
  std::error_code ec;
  const auto exe = std::filesystem::read_symlink("/proc/self/exe", ec);
  if (!ec) {
    const auto installed = exe.parent_path().parent_path() / "share" / "cxosc" / "relations.rel";
    if (std::filesystem::exists(installed)) return installed;
  }
  return built;
}

std::set<Suite> parse_suites(std::string_view text) {
  if (text == "all") return {std::begin(kAllSuites), std::end(kAllSuites)};
  std::set<Suite> suites;
  while (!text.empty()) {
    auto comma = text.find(',');
    std::string_view item = text.substr(0, comma);
    auto suite = parse_suite(item);
    if (!suite) throw ConfigError(fmt::format("unknown suite '{}'", item));
    suites.insert(*suite);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  if (suites.empty()) throw ConfigError("no suites selected");
  return suites;
}

bool RunReport::passed() const {
  return std::all_of(reports.begin(), reports.end(), [](const Report& r) { return r.passed(); });
}

namespace {

Exact parse_rational(const std::string& text, std::string_view what) {
  try {
    return Exact::parse(text);
  } catch (const std::invalid_argument&) {
    throw ConfigError(fmt::format("{} must be a rational 'p/q', got '{}'", what, text));
  }
}

double parse_real(const std::string& text, std::string_view what) {
  if (text.find('/') != std::string::npos) return to_float(parse_rational(text, what)).real();
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ConfigError(fmt::format("{} must be a number, got '{}'", what, text));
  }
  return value;
}

template <Scalar F>
Params<F> make_params(const RunConfig& cfg) {
  try {
    if constexpr (std::same_as<F, Exact>) {
      if (!cfg.a.empty()) return Params<Exact>::from_ab(parse_rational(cfg.a, "a"), parse_rational(cfg.b, "b"));
      return Params<Exact>::from_roots(parse_rational(cfg.p, "p"), parse_rational(cfg.q, "q"));
    } else {
      if (!cfg.a.empty()) return Params<Float>::from_ab(parse_real(cfg.a, "a"), parse_real(cfg.b, "b"));
      return Params<Float>::from_roots(parse_real(cfg.p, "p"), parse_real(cfg.q, "q"));
    }
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    throw ConfigError(std::string("invalid parameters: ") + e.what());
  }
}

template <Scalar F>
std::map<std::string, std::string> describe_params(const Params<F>& p, const RunConfig& cfg) {
  return {
      {"a", to_string(p.a())},
      {"b", to_string(p.b())},
      {"p", to_string(p.root_a())},
      {"q", to_string(p.root_b())},
      {"n_max", std::to_string(cfg.n_max)},
      {"tol", to_string(cfg.tol)},
      {"seed", std::to_string(cfg.seed)},
  };
}

template <Scalar F>
RunReport verify_with(const RunConfig& cfg) {
  const Params<F> p = make_params<F>(cfg);
  std::vector<RelationSpec> relations;
  if (cfg.suites.contains(Suite::structure)) {
    try {
      relations = load_catalog(cfg.catalog.empty() ? default_catalog() : cfg.catalog);
    } catch (const CatalogError& e) {
      throw ConfigError(e.what());
    }
  }
  RunReport report;
  report.params = describe_params(p, cfg);
  report.mode = mode_of<F>();
  report.reports = run_suites(p, relations, cfg.suites, cfg.options());
  return report;
}

json report_to_json(const Report& r) {
  return {{"id", r.id},
          {"suite", r.suite},
          {"anchor", r.anchor},
          {"mode", to_string(r.mode)},
          {"status", to_string(r.status)},
          {"residual", r.residual},
          {"detail", r.detail},
          {"ms", r.ms}};
}

Mode parse_mode(std::string_view text) {
  if (text == to_string(Mode::exact)) return Mode::exact;
  if (text == to_string(Mode::floating)) return Mode::floating;
  throw std::runtime_error(fmt::format("unknown mode '{}'", text));
}

std::string csv_field(std::string_view text) {
  if (text.find_first_of(",\"\n") == std::string_view::npos) return std::string(text);
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// Rounds to the nearest multiple of tol for display.
std::string display(const Float& x, double tol) {
  auto snap = [tol](double v) {
    double s = std::round(v / tol) * tol;
    return s == 0.0 ? 0.0 : s;
  };
  const double re = snap(x.real());
  const double im = snap(x.imag());
  const int digits = std::max(1, static_cast<int>(std::ceil(-std::log10(tol))));
  if (im == 0.0) return fmt::format("{:.{}g}", re, digits);
  return fmt::format("{:.{}g}{:+.{}g}i", re, digits, im, digits);
}

std::string display(const Exact& x, double) { return to_string(x); }

template <Scalar F>
std::string format_matrix(const Matrix<F>& m, double tol) {
  std::string out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out += "[";
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c > 0) out += ", ";
      out += display(m(r, c), tol);
    }
    out += "]\n";
  }
  return out;
}

template <Scalar F>
std::string basis_with(const RunConfig& cfg, int n, int m) {
  const Params<F> p = make_params<F>(cfg);
  const ReducedFn<F> psi = build_psi(p, n, m);
  std::string out = fmt::format(
      "# Psi_{{{},{}}} = kappa * P(z, zbar) * exp(-a z zbar - b zbar^2), kappa = sqrt(2a/pi), a = {}, b = {}\n",
      n, m, to_string(p.a()), to_string(p.b()));
  out += "# deg_z deg_zbar coefficient/kappa\n";
  for (const auto& [key, c] : psi.poly.terms()) {
    out += fmt::format("{} {} {}\n", key.first, key.second, display(c, cfg.tol));
  }
  return out;
}

template <Scalar F>
std::string matrices_with(const RunConfig& cfg, int n) {
  const Params<F> p = make_params<F>(cfg);
  std::string out = fmt::format("# level n = {}, a = {}, b = {}, E_n = {}\n", n, to_string(p.a()),
                                to_string(p.b()), display(p.energy(n), cfg.tol));
  out += "gram\n" + format_matrix(gram_block(p, n), cfg.tol);
  out += "h\n" + format_matrix(h_block(p, n), cfg.tol);
  return out;
}

void check_level(const RunConfig& cfg, int n) {
  if (n < 0 || n > cfg.n_max) throw ConfigError(fmt::format("level n must lie in [0, {}], got {}", cfg.n_max, n));
}

void write_output(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.out.empty() || cfg.out == "-") {
    out << text;
    return;
  }
  std::ofstream file(cfg.out);
  if (!file) throw ConfigError("cannot open output file " + cfg.out);
  file << text;
  if (!file) throw std::runtime_error("failed writing " + cfg.out);
}

void add_common_options(CLI::App& cmd, RunConfig& cfg, std::string& mode, std::string& format, std::string& suites,
                        std::string& catalog) {
  cmd.add_option("--mode", mode, "Coefficient mode: exact or float")->capture_default_str();
  cmd.add_option("--p", cfg.p, "sqrt(a); a rational 'p/q' in exact mode")->capture_default_str();
  cmd.add_option("--q", cfg.q, "sqrt(b); a rational 'p/q' in exact mode")->capture_default_str();
  cmd.add_option("--a", cfg.a, "a directly (exact mode: a rational square)");
  cmd.add_option("--b", cfg.b, "b directly (exact mode: a rational square)");
  cmd.add_option("--nmax", cfg.n_max, "Largest level n swept")->capture_default_str();
  cmd.add_option("--tol", cfg.tol, "Float-mode tolerance")->capture_default_str();
  cmd.add_option("--suites", suites, "'all' or a comma-separated subset of structure,actions,irrep,pseudo,integrals")
      ->capture_default_str();
  cmd.add_option("--out", cfg.out, "Output path, '-' for stdout")->capture_default_str();
  cmd.add_option("--format", format, "json, csv or text")->capture_default_str();
  cmd.add_option("--catalog", catalog, "Relation catalog file");
  cmd.add_option("--seed", cfg.seed, "Seed for sampled checks")->capture_default_str();
}

}  // namespace

std::string emit(const RunReport& report, Format format) {
  switch (format) {
    case Format::json: {
      json suites = json::array();
      for (const Report& r : report.reports) suites.push_back(report_to_json(r));
      json doc{{"params", report.params}, {"mode", to_string(report.mode)}, {"suites", suites}};
      return doc.dump(2) + "\n";
    }
    case Format::csv: {
      std::string out = "id,suite,anchor,mode,status,residual,ms,detail\n";
      for (const Report& r : report.reports) {
        out += fmt::format("{},{},{},{},{},{},{},{}\n", csv_field(r.id), r.suite, csv_field(r.anchor),
                           to_string(r.mode), to_string(r.status), csv_field(r.residual), r.ms,
                           csv_field(r.detail));
      }
      return out;
    }
    case Format::text: {
      std::string out;
      for (const auto& [key, value] : report.params) out += fmt::format("# {} = {}\n", key, value);
      std::size_t failed = 0;
      for (const Report& r : report.reports) {
        if (!r.passed()) ++failed;
        out += fmt::format("{:<7} {:<10} {:<28} residual={} ({:.2f} ms){}\n", to_string(r.status), r.suite, r.id,
                           r.residual, r.ms, r.detail.empty() ? "" : "  " + r.detail);
      }
      out += fmt::format("# {} checks, {} failed\n", report.reports.size(), failed);
      return out;
    }
  }
  return {};
}

RunReport parse_json_report(std::string_view text) {
  try {
    const json doc = json::parse(text);
    RunReport report;
    report.params = doc.at("params").get<std::map<std::string, std::string>>();
    report.mode = parse_mode(doc.at("mode").get<std::string>());
    for (const json& item : doc.at("suites")) {
      Report r;
      r.id = item.at("id").get<std::string>();
      r.suite = item.at("suite").get<std::string>();
      r.anchor = item.at("anchor").get<std::string>();
      r.mode = parse_mode(item.at("mode").get<std::string>());
      auto status = parse_status(item.at("status").get<std::string>());
      if (!status) throw std::runtime_error("unknown status in report");
      r.status = *status;
      r.residual = item.at("residual").get<std::string>();
      r.detail = item.value("detail", std::string{});
      r.ms = item.at("ms").get<double>();
      report.reports.push_back(std::move(r));
    }
    return report;
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("malformed report: ") + e.what());
  }
}

RunReport run_verify(const RunConfig& cfg) {
  validate(cfg);
  return cfg.mode == Mode::exact ? verify_with<Exact>(cfg) : verify_with<Float>(cfg);
}

std::string format_basis(const RunConfig& cfg, int n, int m) {
  validate(cfg);
  check_level(cfg, n);
  if (!BlockIndex::valid(n, m)) throw ConfigError(fmt::format("need 0 <= m <= n, got n = {}, m = {}", n, m));
  return cfg.mode == Mode::exact ? basis_with<Exact>(cfg, n, m) : basis_with<Float>(cfg, n, m);
}

std::string format_matrices(const RunConfig& cfg, int n) {
  validate(cfg);
  check_level(cfg, n);
  return cfg.mode == Mode::exact ? matrices_with<Exact>(cfg, n) : matrices_with<Float>(cfg, n);
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  try {
    cfg.n_max = default_n_max();
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  CLI::App app{"Checks the algebraic structure of a nonseparable complex oscillator"};
  app.require_subcommand(1);
  std::string mode = "exact";
  std::string format = "json";
  std::string suites = "all";
  std::string catalog;
  int n = 0;
  int m = 0;

  auto* verify = app.add_subcommand("verify", "Run verification suites and write a report");
  auto* basis = app.add_subcommand("basis", "Print the polynomial part of Psi_{n,m}");
  auto* matrices = app.add_subcommand("matrices", "Print the Gram and H blocks of level n");
  for (CLI::App* cmd : {verify, basis, matrices}) add_common_options(*cmd, cfg, mode, format, suites, catalog);
  basis->add_option("n", n, "Level")->required();
  basis->add_option("m", m, "Position in the Jordan chain")->required();
  matrices->add_option("n", n, "Level")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (mode == "exact") {
      cfg.mode = Mode::exact;
    } else if (mode == "float") {
      cfg.mode = Mode::floating;
    } else {
      throw ConfigError(fmt::format("unknown mode '{}' (expected exact or float)", mode));
    }
    cfg.format = parse_format(format);
    cfg.suites = parse_suites(suites);
    if (!catalog.empty()) cfg.catalog = catalog;

    if (verify->parsed()) {
      RunReport report = run_verify(cfg);
      write_output(cfg, emit(report, cfg.format), out);
      if (report.passed()) return kExitPass;
      for (const Report& r : report.reports) {
        if (!r.passed()) err << "FAIL " << r.id << " residual=" << r.residual << "\n";
      }
      return kExitFailure;
    }
    if (basis->parsed()) {
      write_output(cfg, format_basis(cfg, n, m), out);
      return kExitPass;
    }
    write_output(cfg, format_matrices(cfg, n), out);
    return kExitPass;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace cxosc::cli
