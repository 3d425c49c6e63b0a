#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include <fmt/format.h>

#include "cxosc/apply.hpp"
#include "cxosc/gaussint.hpp"
#include "cxosc/verifier.hpp"
#include "support.hpp"

namespace {

using namespace cxosc;

const std::string kData = CXOSC_TEST_DATA_DIR;

struct Outcome {
  bool ok = true;
  std::string note;
};

int failures = 0;

// Runs one criterion and prints a single PASS/FAIL line.
void criterion(int number, std::string_view title, double limit_s, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = limit_s <= 0 || secs < limit_s;
  const bool ok = out.ok && in_time;
  if (!ok) ++failures;
  const std::string budget = limit_s > 0 ? fmt::format(" < {:g}s", limit_s) : "";
  fmt::print("[{}] criterion {}: {} ({}; {:.3f}s{}){}\n", ok ? "PASS" : "FAIL", number, title, out.note, secs, budget,
             in_time ? "" : " over time budget");
  std::fflush(stdout);
}

Outcome all_pass(const std::vector<Report>& reports, std::string_view what) {
  Outcome out{true, fmt::format("{} {}", reports.size(), what)};
  for (const Report& r : reports) {
    if (r.status != Status::pass) {
      out.ok = false;
      out.note += fmt::format(", {} {} residual={}", r.id, to_string(r.status), r.residual);
    }
  }
  return out;
}

}  // namespace

int main() {
  const Params<Exact> p = testing::default_exact();
  const Params<Float> fp = testing::default_float();
  VerifyOptions opts;
  opts.n_max = 10;

  criterion(1, "structure relations hold exactly at a=1, b=1/4 and two random admissible points", 5.0, [&] {
    const auto relations = load_catalog(kData + "/relations.rel");
    if (relations.size() < 45) return Outcome{false, fmt::format("only {} relations", relations.size())};
    testing::Gen gen(20211);
    std::vector<Report> reports = check_structure(p, relations, opts);
    std::string points = "a=1 b=1/4";
    for (int i = 0; i < 2; ++i) {
      const auto q = Params<Exact>::from_roots(gen.positive_rational(), gen.positive_rational());
      points += fmt::format(", a={} b={}", to_string(q.a()), to_string(q.b()));
      auto more = check_structure(q, relations, opts);
      reports.insert(reports.end(), more.begin(), more.end());
    }
    Outcome out = all_pass(reports, "relation checks");
    for (const Report& r : reports) {
      if (r.residual != "0") out.ok = false;
    }
    out.note += " at " + points;
    return out;
  });

  criterion(2, "compositional catalog equals explicit z, zbar forms for all 14 generators", 1.0, [&] {
    return all_pass(check_explicit_forms(p, opts), "generators");
  });

  criterion(3, "(H - 4a(n+1)) Psi_{n,m} = Psi_{n,m-1}, and 0 at m = 0, for n <= 10", 10.0, [&] {
    const DiffOp<Exact> h = make_operator(p, Generator::H);
    int checked = 0;
    for (int n = 0; n <= 10; ++n) {
      for (int m = 0; m <= n; ++m) {
        const ReducedFn<Exact> psi = build_psi(p, n, m);
        const ReducedFn<Exact> lhs = apply(p, h, psi) - p.energy(n) * psi;
        const ReducedFn<Exact> rhs = m == 0 ? ReducedFn<Exact>{} : build_psi(p, n, m - 1);
        if (!(lhs == rhs)) return Outcome{false, fmt::format("mismatch at n={} m={}", n, m)};
        ++checked;
      }
    }
    return Outcome{true, fmt::format("{} basis functions", checked)};
  });

  criterion(4, "ladder, R/S/T/U, gl(2) and osp(1/4) actions exact for n <= 10", 30.0, [&] {
    return all_pass(check_actions(p, opts), "formula families");
  });

  criterion(5, "Gram blocks are anti-diagonal, Psi_{n,0} self-orthogonal, ground norm 1 (n <= 8)", 20.0, [&] {
    const MomentTable<Exact> table(p);
    if (!(inner_product(table, build_psi(p, 0, 0), build_psi(p, 0, 0)) == Exact(1))) {
      return Outcome{false, "ground norm != 1"};
    }
    for (int n = 1; n <= 8; ++n) {
      if (!(inner_product(table, build_psi(p, n, 0), build_psi(p, n, 0)) == Exact(0))) {
        return Outcome{false, fmt::format("Psi_{},0 not self-orthogonal", n)};
      }
    }
    for (int n = 0; n <= 8; ++n) {
      if (!(gram_block(p, n) == anti_identity<Exact>(n))) return Outcome{false, fmt::format("gram block n={}", n)};
    }
    return Outcome{true, "9 Gram blocks, 8 self-orthogonal levels"};
  });

  criterion(6, "H blocks equal E_n I + superdiagonal ones (n <= 8)", 0.0, [&] {
    for (int n = 0; n <= 8; ++n) {
      if (!(h_block(p, n) == jordan_block(p, n))) return Outcome{false, fmt::format("h block n={}", n)};
    }
    return Outcome{true, "9 blocks"};
  });

  criterion(7, "moment recursion matches Gauss-Hermite quadrature to relative 1e-8", 0.0, [&] {
    const auto reports = check_integrals(p, opts);
    std::vector<Report> oracle;
    for (const Report& r : reports) {
      if (r.id.starts_with("quadrature.")) oracle.push_back(r);
    }
    if (oracle.size() != 2) return Outcome{false, "oracle reports missing"};
    Outcome out = all_pass(oracle, "oracle sweeps (monomials p+q <= 12, 20 basis pairs)");
    for (const Report& r : oracle) out.note += fmt::format(", {} worst={}", r.id, r.residual);
    return out;
  });

  criterion(8, "su(2) and osp(1/4) matrix elements on Phi_{j,mu} (exact squared, float 1e-10)", 0.0, [&] {
    std::vector<Report> reports = check_irrep(p, opts);
    VerifyOptions fopts = opts;
    fopts.tol = 1e-10;
    auto more = check_irrep(fp, fopts);
    reports.insert(reports.end(), more.begin(), more.end());
    return all_pass(reports, "exact and float families");
  });

  criterion(9, "every shipped negative control is detected and named", 0.0, [&] {
    const auto controls = load_catalog(kData + "/negative_controls.rel");
    const auto reports = check_structure(p, controls, opts);
    if (controls.size() != 5 || reports.size() != 5) return Outcome{false, "expected 5 controls"};
    std::string names;
    for (std::size_t i = 0; i < reports.size(); ++i) {
      const Report& r = reports[i];
      if (r.status != Status::fail || r.residual == "0" || r.id != controls[i].id) {
        return Outcome{false, fmt::format("{} not detected", controls[i].id)};
      }
      names += fmt::format("{}{}={}", names.empty() ? "" : ", ", r.id, r.residual);
    }
    return Outcome{true, "residuals " + names};
  });

  fmt::print("{} of 9 criteria passed\n", 9 - failures);
  return failures == 0 ? 0 : 1;
}
