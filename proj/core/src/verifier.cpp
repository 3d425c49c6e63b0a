#include "cxosc/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <random>

#include <fmt/format.h>

#include "cxosc/apply.hpp"
#include "cxosc/basis.hpp"
#include "cxosc/gaussint.hpp"
#include "cxosc/operators.hpp"
#include "cxosc/quadrature.hpp"

namespace cxosc {

std::string_view to_string(Status status) {
  switch (status) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::skipped:
      return "skipped";
  }
  return "?";
}

std::optional<Status> parse_status(std::string_view text) {
  for (Status s : {Status::pass, Status::fail, Status::skipped}) {
    if (to_string(s) == text) return s;
  }
  return std::nullopt;
}

bool same_outcome(const Report& lhs, const Report& rhs) {
  Report l = lhs;
  l.ms = rhs.ms;
  return l == rhs;
}

std::string_view to_string(Suite suite) {
  switch (suite) {
    case Suite::structure:
      return "structure";
    case Suite::actions:
      return "actions";
    case Suite::irrep:
      return "irrep";
    case Suite::pseudo:
      return "pseudo";
    case Suite::integrals:
      return "integrals";
  }
  return "?";
}

std::optional<Suite> parse_suite(std::string_view text) {
  for (Suite s : kAllSuites) {
    if (to_string(s) == text) return s;
  }
  return std::nullopt;
}

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

template <Scalar F>
Magnitude<F> normalized(const Magnitude<F>& diff, const Magnitude<F>& lhs, const Magnitude<F>& rhs) {
  if constexpr (std::same_as<F, Exact>) {
    (void)lhs;
    (void)rhs;
    return diff;
  } else {
    return diff / std::max({1.0, lhs, rhs});
  }
}

template <Scalar F>
Magnitude<F> residual(const Poly2<F>& lhs, const Poly2<F>& rhs) {
  return normalized<F>(max_coeff(Poly2<F>(lhs - rhs)), max_coeff(lhs), max_coeff(rhs));
}

template <Scalar F>
Magnitude<F> residual(const DiffOp<F>& lhs, const DiffOp<F>& rhs) {
  return normalized<F>(max_coeff(DiffOp<F>(lhs - rhs)), max_coeff(lhs), max_coeff(rhs));
}

template <Scalar F>
bool acceptable(const Magnitude<F>& r, double tol) {
  if constexpr (std::same_as<F, Exact>) {
    (void)tol;
    return sgn(r) == 0;
  } else {
    return r <= tol;
  }
}

// Tracks the worst residual of a family of checks.
template <Scalar F>
struct Worst {
  Magnitude<F> value{0};
  std::string where;

  void update(const Magnitude<F>& r, std::string_view context) {
    if (where.empty() || r > value) {
      value = r;
      where = context;
    }
  }
};

template <Scalar F>
Report make_report(std::string id, std::string_view suite, std::string anchor, const Worst<F>& worst, double tol,
                   Clock::time_point start) {
  Report r;
  r.id = std::move(id);
  r.suite = std::string(suite);
  r.anchor = std::move(anchor);
  r.mode = mode_of<F>();
  r.status = acceptable<F>(worst.value, tol) ? Status::pass : Status::fail;
  r.residual = to_string(worst.value);
  if (r.status == Status::fail) r.detail = worst.where;
  r.ms = elapsed_ms(start);
  return r;
}

std::string at(int n, int m) { return fmt::format("n={} m={}", n, m); }

// Lazily built Psi_{n,m} table.
template <Scalar F>
class PsiCache {
 public:
  explicit PsiCache(const Params<F>& p) : p_(p) {}
  const ReducedFn<F>& operator()(int n, int m) {
    auto it = cache_.find({n, m});
    if (it == cache_.end()) it = cache_.emplace(std::pair{n, m}, build_psi(p_, n, m)).first;
    return it->second;
  }

 private:
  const Params<F>& p_;
  std::map<std::pair<int, int>, ReducedFn<F>> cache_;
};

// ---------------------------------------------------------------------------
// Action formulas on Psi_{n,m}

template <Scalar F>
struct Term {
  F coeff;
  int n;
  int m;
};

template <Scalar F>
struct ActionRule {
  std::string id;
  std::string anchor;
  Generator op;
  std::function<std::vector<Term<F>>(const Params<F>&, int n, int m)> predict;
};

template <Scalar F>
F q(long num, long den = 1) {
  return from_ratio<F>(num, den);
}

template <Scalar F>
F i(long v) {
  return from_integer<F>(v);
}

template <Scalar F>
std::vector<ActionRule<F>> action_rules() {
  using T = std::vector<Term<F>>;
  std::vector<ActionRule<F>> rules;
  rules.push_back({"jordan_chain.H", "jordan-chain", Generator::H, [](const Params<F>& p, int n, int m) {
                     T t{{p.energy(n), n, m}};
                     if (m >= 1) t.push_back({i<F>(1), n, m - 1});
                     return t;
                   }});
  rules.push_back({"ladder.B-", "ladder-B", Generator::B_minus, [](const Params<F>& p, int n, int m) {
                     if (m == 0) return T{{q<F>(4) * i<F>(n) * p.root_ab(), n - 1, 0}};
                     return T{{q<F>(4) * i<F>(n - m) * p.root_ab(), n - 1, m},
                              {q<F>(1, 2) * p.root_b_over_a(), n - 1, m - 1}};
                   }});
  rules.push_back({"ladder.B+", "ladder-B", Generator::B_plus, [](const Params<F>& p, int n, int m) {
                     return T{{q<F>(-4) * i<F>(m + 1) * p.root_ab(), n + 1, m + 1},
                              {q<F>(-1, 2) * p.root_b_over_a(), n + 1, m}};
                   }});
  rules.push_back({"ladder.A-", "ladder-A", Generator::A_minus, [](const Params<F>& p, int n, int m) {
                     if (m == 0) return T{};
                     return T{{q<F>(1, 2) * p.root_a_over_b(), n - 1, m - 1}};
                   }});
  rules.push_back({"ladder.A+", "ladder-A", Generator::A_plus, [](const Params<F>& p, int n, int m) {
                     return T{{q<F>(-1, 2) * p.root_a_over_b(), n + 1, m}};
                   }});
  rules.push_back({"block.R", "jordan-block-operators", Generator::R, [](const Params<F>& p, int n, int m) {
                     if (m == 0) return T{};
                     return T{{-p.a() / (q<F>(4) * p.b()), n, m - 1}};
                   }});
  rules.push_back({"block.S", "jordan-block-operators", Generator::S, [](const Params<F>& p, int n, int m) {
                     const F ab16 = q<F>(16) * p.a() * p.b();
                     if (m == 0) return T{{q<F>(-2) * p.b() * i<F>(n), n, 0}, {-ab16 * i<F>(n), n, 1}};
                     return T{{-p.b() / (q<F>(4) * p.a()), n, m - 1},
                              {q<F>(-2) * p.b() * i<F>(n), n, m},
                              {-ab16 * i<F>((n - m) * (m + 1)), n, m + 1}};
                   }});
  rules.push_back({"block.T", "jordan-block-operators", Generator::T, [](const Params<F>& p, int n, int m) {
                     return T{{q<F>(-2) * p.a() * i<F>(n - 2 * m), n, m}};
                   }});
  rules.push_back({"block.U", "jordan-block-operators", Generator::U, [](const Params<F>& p, int n, int m) {
                     if (m == 0) return T{{q<F>(-2) * p.a() * i<F>(n), n, 0}};
                     return T{{q<F>(-2) * p.a() * i<F>(n), n, m}, {q<F>(-1, 2), n, m - 1}};
                   }});
  rules.push_back({"gl2.J0", "gl2-action", Generator::J0, [](const Params<F>&, int n, int m) {
                     return T{{i<F>(m) - q<F>(n, 2), n, m}};
                   }});
  rules.push_back({"gl2.J+", "gl2-action", Generator::J_plus, [](const Params<F>&, int n, int m) {
                     return T{{i<F>((n - m) * (m + 1)), n, m + 1}};
                   }});
  rules.push_back({"gl2.J-", "gl2-action", Generator::J_minus, [](const Params<F>&, int n, int m) {
                     if (m == 0) return T{};
                     return T{{i<F>(1), n, m - 1}};
                   }});
  rules.push_back({"gl2.K", "gl2-action", Generator::K, [](const Params<F>&, int n, int m) {
                     return T{{i<F>(n + 1), n, m}};
                   }});
  rules.push_back({"osp.a1+", "osp14-action", Generator::a1_plus, [](const Params<F>&, int n, int m) {
                     return T{{i<F>(m + 1), n + 1, m + 1}};
                   }});
  rules.push_back({"osp.a1-", "osp14-action", Generator::a1_minus, [](const Params<F>&, int n, int m) {
                     if (m == 0) return T{};
                     return T{{i<F>(1), n - 1, m - 1}};
                   }});
  rules.push_back({"osp.a2+", "osp14-action", Generator::a2_plus, [](const Params<F>&, int n, int m) {
                     return T{{i<F>(1), n + 1, m}};
                   }});
  rules.push_back({"osp.a2-", "osp14-action", Generator::a2_minus, [](const Params<F>&, int n, int m) {
                     return T{{i<F>(n - m), n - 1, m}};
                   }});
  rules.push_back({"osp.D+11", "osp14-action", Generator::D_plus_11, [](const Params<F>&, int n, int m) {
                     return T{{i<F>((m + 1) * (m + 2)), n + 2, m + 2}};
                   }});
  rules.push_back({"osp.D+12", "osp14-action", Generator::D_plus_12, [](const Params<F>&, int n, int m) {
                     return T{{i<F>(m + 1), n + 2, m + 1}};
                   }});
  rules.push_back({"osp.D+22", "osp14-action", Generator::D_plus_22, [](const Params<F>&, int n, int m) {
                     return T{{i<F>(1), n + 2, m}};
                   }});
  rules.push_back({"osp.D-11", "osp14-action", Generator::D_minus_11, [](const Params<F>&, int n, int m) {
                     if (m < 2) return T{};
                     return T{{i<F>(1), n - 2, m - 2}};
                   }});
  rules.push_back({"osp.D-12", "osp14-action", Generator::D_minus_12, [](const Params<F>&, int n, int m) {
                     if (m == 0) return T{};
                     return T{{i<F>(n - m), n - 2, m - 1}};
                   }});
  rules.push_back({"osp.D-22", "osp14-action", Generator::D_minus_22, [](const Params<F>&, int n, int m) {
                     return T{{i<F>((n - m) * (n - m - 1)), n - 2, m}};
                   }});
  return rules;
}

// ---------------------------------------------------------------------------
// Matrix elements on Phi_{j,mu}

// Predicted op Phi_{j,mu} = sign * sqrt(coeff_sq) * Phi_target, labels doubled.
template <Scalar F>
struct IrrepPrediction {
  int target_two_j;
  int target_two_mu;
  F coeff_sq;
  int sign = 1;
};

template <Scalar F>
struct IrrepRule {
  std::string id;
  std::string anchor;
  Generator op;
  // Arguments are j and mu as field elements.
  std::function<IrrepPrediction<F>(int two_j, int two_mu, const F& j, const F& mu)> predict;
};

template <Scalar F>
std::vector<IrrepRule<F>> irrep_rules() {
  using P = IrrepPrediction<F>;
  const F one = i<F>(1);
  const F half = q<F>(1, 2);
  std::vector<IrrepRule<F>> rules;
  rules.push_back({"su2.J0", "su2-irrep", Generator::J0, [](int tj, int tm, const F& j, const F& mu) {
                     (void)j;
                     return P{tj, tm, mu * mu, tm < 0 ? -1 : 1};
                   }});
  rules.push_back({"su2.J+", "su2-irrep", Generator::J_plus, [one](int tj, int tm, const F& j, const F& mu) {
                     return P{tj, tm + 2, (j - mu) * (j + mu + one)};
                   }});
  rules.push_back({"su2.J-", "su2-irrep", Generator::J_minus, [one](int tj, int tm, const F& j, const F& mu) {
                     return P{tj, tm - 2, (j + mu) * (j - mu + one)};
                   }});
  rules.push_back({"su2.K", "su2-irrep", Generator::K, [one](int tj, int tm, const F& j, const F&) {
                     F c = q<F>(2) * j + one;
                     return P{tj, tm, c * c};
                   }});
  rules.push_back({"osp-irrep.a1+", "osp14-irrep", Generator::a1_plus,
                   [half](int tj, int tm, const F& j, const F& mu) {
                     return P{tj + 1, tm + 1, j + mu + half + half};
                   }});
  rules.push_back({"osp-irrep.a1-", "osp14-irrep", Generator::a1_minus,
                   [half](int tj, int tm, const F& j, const F& mu) {
                     return P{tj - 1, tm - 1, j + mu + half - half};
                   }});
  rules.push_back({"osp-irrep.a2+", "osp14-irrep", Generator::a2_plus,
                   [half](int tj, int tm, const F& j, const F& mu) {
                     return P{tj + 1, tm - 1, j - mu + half + half};
                   }});
  rules.push_back({"osp-irrep.a2-", "osp14-irrep", Generator::a2_minus,
                   [half](int tj, int tm, const F& j, const F& mu) {
                     return P{tj - 1, tm + 1, j - mu + half - half};
                   }});
  rules.push_back({"osp-irrep.D+11", "osp14-irrep", Generator::D_plus_11,
                   [one](int tj, int tm, const F& j, const F& mu) {
                     return P{tj + 2, tm + 2, (j + mu + one) * (j + mu + one + one)};
                   }});
  rules.push_back({"osp-irrep.D-11", "osp14-irrep", Generator::D_minus_11,
                   [one](int tj, int tm, const F& j, const F& mu) {
                     return P{tj - 2, tm - 2, (j + mu - one) * (j + mu + one - one)};
                   }});
  rules.push_back({"osp-irrep.D+12", "osp14-irrep", Generator::D_plus_12,
                   [half](int tj, int tm, const F& j, const F& mu) {
                     return P{tj + 2, tm, (j - mu + half + half) * (j + mu + half + half)};
                   }});
  rules.push_back({"osp-irrep.D-12", "osp14-irrep", Generator::D_minus_12,
                   [half](int tj, int tm, const F& j, const F& mu) {
                     return P{tj - 2, tm, (j - mu + half - half) * (j + mu + half - half)};
                   }});
  rules.push_back({"osp-irrep.D+22", "osp14-irrep", Generator::D_plus_22,
                   [one](int tj, int tm, const F& j, const F& mu) {
                     return P{tj + 2, tm - 2, (j - mu + one) * (j - mu + one + one)};
                   }});
  rules.push_back({"osp-irrep.D-22", "osp14-irrep", Generator::D_minus_22,
                   [one](int tj, int tm, const F& j, const F& mu) {
                     return P{tj - 2, tm + 2, (j - mu - one) * (j - mu + one - one)};
                   }});
  return rules;
}

// Coefficient lambda with result == lambda * target, if any.
template <Scalar F>
std::optional<F> proportionality(const Poly2<F>& result, const Poly2<F>& target) {
  if (target.is_zero()) return std::nullopt;
  const auto& [key, c] = *target.terms().begin();
  F lambda = result.coeff(key.first, key.second) / c;
  if (Poly2<F>(result - lambda * target).is_zero()) return lambda;
  return std::nullopt;
}

}  // namespace

// ---------------------------------------------------------------------------

template <Scalar F>
std::vector<Report> check_structure(const Params<F>& p, const std::vector<RelationSpec>& relations,
                                    const VerifyOptions& options) {
  const OperatorCatalog<F> catalog(p);
  std::vector<Report> reports;
  reports.reserve(relations.size());
  for (const RelationSpec& spec : relations) {
    auto start = Clock::now();
    Worst<F> worst;
    DiffOp<F> lhs = evaluate(spec.lhs, catalog);
    DiffOp<F> rhs = evaluate(spec.rhs, catalog);
    worst.update(residual(lhs, rhs), "lhs - rhs = " + to_string(DiffOp<F>(lhs - rhs)));
    reports.push_back(make_report(spec.id, to_string(Suite::structure), spec.anchor, worst, options.tol, start));
  }
  return reports;
}

template <Scalar F>
std::vector<Report> check_explicit_forms(const Params<F>& p, const VerifyOptions& options) {
  const OperatorCatalog<F> catalog(p);
  std::vector<Report> reports;
  for (Generator g : kExplicitFormGenerators) {
    auto start = Clock::now();
    Worst<F> worst;
    const DiffOp<F> transcribed = explicit_form(p, g);
    worst.update(residual(catalog[g], transcribed),
                 "catalog - explicit = " + to_string(DiffOp<F>(catalog[g] - transcribed)));
    reports.push_back(make_report("explicit_form." + std::string(name(g)), to_string(Suite::structure),
                                  "osp14-explicit", worst, options.tol, start));
  }
  return reports;
}

template <Scalar F>
std::vector<Report> check_actions(const Params<F>& p, const VerifyOptions& options) {
  const OperatorCatalog<F> catalog(p);
  PsiCache<F> psi(p);
  std::vector<Report> reports;
  for (const ActionRule<F>& rule : action_rules<F>()) {
    auto start = Clock::now();
    Worst<F> worst;
    for (int n = 0; n <= options.n_max; ++n) {
      for (int m = 0; m <= n; ++m) {
        ReducedFn<F> lhs = apply(p, catalog[rule.op], psi(n, m));
        ReducedFn<F> rhs;
        bool malformed = false;
        for (const Term<F>& t : rule.predict(p, n, m)) {
          if (is_zero(t.coeff)) continue;
          if (!BlockIndex::valid(t.n, t.m)) {
            malformed = true;
            continue;
          }
          rhs += t.coeff * psi(t.n, t.m);
        }
        Magnitude<F> r = residual(lhs.poly, rhs.poly);
        if (malformed && r == Magnitude<F>{0}) r = Magnitude<F>{1};
        worst.update(r, at(n, m) + (malformed ? " (prediction leaves the basis)" : ""));
      }
    }
    reports.push_back(make_report(rule.id, to_string(Suite::actions), rule.anchor, worst, options.tol, start));
  }
  return reports;
}

template <Scalar F>
std::vector<Report> check_irrep(const Params<F>& p, const VerifyOptions& options) {
  const OperatorCatalog<F> catalog(p);
  std::map<std::pair<int, int>, ScaledFn<F>> phi;
  auto get_phi = [&](int n, int m) -> const ScaledFn<F>& {
    auto it = phi.find({n, m});
    if (it == phi.end()) it = phi.emplace(std::pair{n, m}, build_phi(p, n, m)).first;
    return it->second;
  };

  std::vector<Report> reports;
  for (const IrrepRule<F>& rule : irrep_rules<F>()) {
    auto start = Clock::now();
    Worst<F> worst;
    for (int n = 0; n <= options.n_max; ++n) {
      for (int m = 0; m <= n; ++m) {
        const BlockIndex src(n, m);
        const F j = q<F>(src.two_j(), 2);
        const F mu = q<F>(src.two_mu(), 2);
        const IrrepPrediction<F> pred = rule.predict(src.two_j(), src.two_mu(), j, mu);
        const ScaledFn<F>& source = get_phi(n, m);
        const ReducedFn<F> result = apply(p, catalog[rule.op], source.fn);
        const std::string where = fmt::format("j={}/2 mu={}/2", src.two_j(), src.two_mu());

        const int tn = pred.target_two_j;
        const bool target_valid =
            tn >= 0 && (tn + pred.target_two_mu) % 2 == 0 && BlockIndex::valid(tn, (tn + pred.target_two_mu) / 2);
        if (!target_valid) {
          // Off the multiplet: both the action and the predicted coefficient vanish.
          Magnitude<F> r = max_coeff(result.poly);
          if constexpr (std::same_as<F, Float>) r = normalized<F>(r, max_coeff(source.fn.poly), 0.0);
          Magnitude<F> c = magnitude(pred.coeff_sq);
          worst.update(r > c ? r : c, where + " (target outside the basis)");
          continue;
        }
        const BlockIndex tgt = BlockIndex::from_doubled(tn, pred.target_two_mu);
        const ScaledFn<F>& target = get_phi(tgt.n(), tgt.m());

        if constexpr (std::same_as<F, Exact>) {
          // sqrt(s_src) lambda Psi_tgt = sign sqrt(c^2 s_tgt) Psi_tgt, checked
          // as lambda^2 s_src == c^2 s_tgt with matching sign.
          std::optional<F> lambda = proportionality(result.poly, target.fn.poly);
          if (!lambda) {
            worst.update(max_coeff(result.poly), where + " (action not proportional to target)");
            continue;
          }
          F squared_gap = (*lambda) * (*lambda) * source.scale_sq - pred.coeff_sq * target.scale_sq;
          Magnitude<F> r = magnitude(squared_gap);
          const int lambda_sign = sgn(lambda->re());
          if (!lambda->is_real() || (lambda_sign != 0 && lambda_sign != pred.sign)) {
            r = r + magnitude(*lambda) + mpq_class(1);
          }
          worst.update(r, where);
        } else {
          const F coeff = static_cast<double>(pred.sign) * std::sqrt(pred.coeff_sq);
          worst.update(residual(result.poly, Poly2<F>(coeff * target.fn.poly)), where);
        }
      }
    }
    reports.push_back(make_report(rule.id, to_string(Suite::irrep), rule.anchor, worst, options.tol, start));
  }
  return reports;
}

template <Scalar F>
Report check_pseudo_hermiticity(const DiffOp<F>& h, std::string id, const VerifyOptions& options) {
  auto start = Clock::now();
  Worst<F> worst;
  const DiffOp<F> swapped = swap_vars(h);
  const DiffOp<F> adj = adjoint(h);
  worst.update(residual(swapped, adj), "swap - adjoint = " + to_string(DiffOp<F>(swapped - adj)));
  return make_report(std::move(id), to_string(Suite::pseudo), "pseudo-hermiticity", worst, options.tol, start);
}

template <Scalar F>
Report check_pseudo_hermiticity(const Params<F>& p, const VerifyOptions& options) {
  return check_pseudo_hermiticity(make_operator(p, Generator::H), "pseudo_hermiticity.H", options);
}

template <Scalar F>
std::vector<Report> check_integrals(const Params<F>& p, const VerifyOptions& options) {
  const std::string suite(to_string(Suite::integrals));
  const int n_max = options.n_max;
  MomentTable<F> table(p);
  PsiCache<F> psi(p);
  std::vector<Report> reports;

  auto scalar_residual = [](const F& value, const F& expected) -> Magnitude<F> {
    return magnitude(F(value - expected));
  };

  {
    auto start = Clock::now();
    Worst<F> worst;
    worst.update(scalar_residual(inner_product(table, psi(0, 0), psi(0, 0)), i<F>(1)), "<<Psi00|Psi00>>");
    reports.push_back(make_report("biorthogonality.ground_norm", suite, "bilinear-norm", worst, options.tol, start));
  }
  {
    auto start = Clock::now();
    Worst<F> worst;
    for (int n = 1; n <= n_max; ++n) {
      worst.update(scalar_residual(inner_product(table, psi(n, 0), psi(n, 0)), F{}), at(n, 0));
    }
    reports.push_back(
        make_report("biorthogonality.self_orthogonal", suite, "bilinear-norm", worst, options.tol, start));
  }
  {
    auto start = Clock::now();
    Worst<F> worst;
    for (int n = 0; n <= n_max; ++n) {
      worst.update(max_deviation(gram_block(p, n), anti_identity<F>(n)), fmt::format("n={}", n));
    }
    reports.push_back(make_report("biorthogonality.gram_blocks", suite, "biorthogonality", worst, options.tol, start));
  }
  {
    // delta_{n,n'} across levels.
    auto start = Clock::now();
    Worst<F> worst;
    for (int n = 0; n <= n_max; ++n) {
      for (int n2 = n + 1; n2 <= n_max; ++n2) {
        for (int m = 0; m <= n; ++m) {
          for (int m2 = 0; m2 <= n2; ++m2) {
            worst.update(scalar_residual(inner_product(table, psi(n, m), psi(n2, m2)), F{}),
                         fmt::format("({},{}) vs ({},{})", n, m, n2, m2));
          }
        }
      }
    }
    reports.push_back(make_report("biorthogonality.cross_level", suite, "biorthogonality", worst, options.tol, start));
  }
  {
    auto start = Clock::now();
    Worst<F> worst;
    for (int n = 0; n <= n_max; ++n) {
      worst.update(max_deviation(h_block(p, n), jordan_block(p, n)), fmt::format("n={}", n));
    }
    reports.push_back(make_report("jordan_form.h_blocks", suite, "jordan-decomposition", worst, options.tol, start));
  }
  {
    // Every polynomial of total degree <= N lies in the span of Psi_{n,m},
    // n <= N; the truncated resolution of identity must reproduce it.
    auto start = Clock::now();
    Worst<F> worst;
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<int> coeff(-9, 9);
    const int degree = std::min(n_max, 6);
    for (int trial = 0; trial < 3; ++trial) {
      ReducedFn<F> f;
      for (int dz = 0; dz <= degree; ++dz) {
        for (int dzb = 0; dz + dzb <= degree; ++dzb) {
          f.poly.add_term(dz, dzb, q<F>(coeff(rng), 1 + (coeff(rng) + 9) % 4));
        }
      }
      ReducedFn<F> rebuilt;
      for (int n = 0; n <= degree; ++n) {
        for (int m = 0; m <= n; ++m) rebuilt += inner_product(table, psi(n, n - m), f) * psi(n, m);
      }
      worst.update(residual(rebuilt.poly, f.poly), fmt::format("trial {}", trial));
    }
    reports.push_back(
        make_report("resolution_of_identity.truncated", suite, "identity-decomposition", worst, options.tol, start));
  }

  // Quadrature oracle, always in floating point.
  const Params<Float> fp = to_float(p);
  const bool oracle_ok = fp.a().real() > fp.b().real();
  auto skipped = [&](std::string id) {
    Report r;
    r.id = std::move(id);
    r.suite = suite;
    r.anchor = "quadrature-oracle";
    r.mode = mode_of<F>();
    r.status = Status::skipped;
    r.residual = "0";
    r.detail = "quadrature oracle requires a > b";
    return r;
  };
  // Relative error against the integrand's L1 scale, so vanishing integrals
  // are still judged at the oracle's precision.
  constexpr double kOracleTol = 1e-8;
  auto oracle_report = [&](std::string id, const Worst<Float>& worst, Clock::time_point start) {
    Report r = make_report<Float>(std::move(id), suite, "quadrature-oracle", worst, kOracleTol, start);
    r.mode = mode_of<F>();
    return r;
  };

  if (!oracle_ok) {
    reports.push_back(skipped("quadrature.moments"));
    reports.push_back(skipped("quadrature.basis_pairs"));
    return reports;
  }
  {
    auto start = Clock::now();
    Worst<Float> worst;
    const double unit = std::numbers::pi / (2.0 * fp.a().real());
    for (int total = 0; total <= options.quadrature_moment_degree; ++total) {
      for (int pd = 0; pd <= total; ++pd) {
        const int qd = total - pd;
        const Float exact = to_float(table.multiplier(pd, qd)) * unit;
        const Poly2<Float> mono = Poly2<Float>::monomial(pd, qd);
        const Float numeric = gaussian_integral(fp, mono);
        const double scale = std::max(std::abs(exact), gaussian_abs_integral(fp, mono));
        worst.update(std::abs(numeric - exact) / scale, fmt::format("I({},{})", pd, qd));
      }
    }
    reports.push_back(oracle_report("quadrature.moments", worst, start));
  }
  {
    auto start = Clock::now();
    Worst<Float> worst;
    std::mt19937_64 rng(options.seed + 1);
    const int level_cap = std::min(n_max, options.quadrature_moment_degree / 2);
    std::uniform_int_distribution<int> level(0, level_cap);
    const double kappa_sq = 2.0 * fp.a().real() / std::numbers::pi;
    for (int pair = 0; pair < options.quadrature_pairs; ++pair) {
      const int n1 = level(rng);
      const int m1 = std::uniform_int_distribution<int>(0, n1)(rng);
      const int n2 = level(rng);
      const int m2 = std::uniform_int_distribution<int>(0, n2)(rng);
      const Float exact = to_float(inner_product(table, psi(n1, m1), psi(n2, m2)));
      const ReducedFn<Float> f = to_float(psi(n1, m1));
      const ReducedFn<Float> g = to_float(psi(n2, m2));
      const Float numeric = quadrature_oracle(fp, f, g);
      const double scale = std::max(std::abs(exact), kappa_sq * gaussian_abs_integral(fp, f.poly * g.poly));
      worst.update(std::abs(numeric - exact) / scale, fmt::format("({},{}) x ({},{})", n1, m1, n2, m2));
    }
    reports.push_back(oracle_report("quadrature.basis_pairs", worst, start));
  }
  return reports;
}

template <Scalar F>
std::vector<Report> run_suites(const Params<F>& p, const std::vector<RelationSpec>& relations,
                               const std::set<Suite>& suites, const VerifyOptions& options) {
  std::vector<Report> reports;
  auto append = [&](std::vector<Report> more) {
    reports.insert(reports.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
  };
  if (suites.contains(Suite::structure)) {
    append(check_structure(p, relations, options));
    append(check_explicit_forms(p, options));
  }
  if (suites.contains(Suite::actions)) append(check_actions(p, options));
  if (suites.contains(Suite::irrep)) append(check_irrep(p, options));
  if (suites.contains(Suite::pseudo)) reports.push_back(check_pseudo_hermiticity(p, options));
  if (suites.contains(Suite::integrals)) append(check_integrals(p, options));
  return reports;
}

#define CXOSC_INSTANTIATE(F)                                                                              \
  template std::vector<Report> check_structure(const Params<F>&, const std::vector<RelationSpec>&,        \
                                               const VerifyOptions&);                                     \
  template std::vector<Report> check_explicit_forms(const Params<F>&, const VerifyOptions&);                    \
  template std::vector<Report> check_actions(const Params<F>&, const VerifyOptions&);                     \
  template std::vector<Report> check_irrep(const Params<F>&, const VerifyOptions&);                       \
  template Report check_pseudo_hermiticity(const DiffOp<F>&, std::string, const VerifyOptions&);          \
  template Report check_pseudo_hermiticity(const Params<F>&, const VerifyOptions&);                       \
  template std::vector<Report> check_integrals(const Params<F>&, const VerifyOptions&);                   \
  template std::vector<Report> run_suites(const Params<F>&, const std::vector<RelationSpec>&,             \
                                          const std::set<Suite>&, const VerifyOptions&);

CXOSC_INSTANTIATE(Exact)
CXOSC_INSTANTIATE(Float)

#undef CXOSC_INSTANTIATE

}  // namespace cxosc
