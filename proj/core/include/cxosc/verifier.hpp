#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "cxosc/diffop.hpp"
#include "cxosc/params.hpp"
#include "cxosc/relations.hpp"

namespace cxosc {

enum class Status { pass, fail, skipped };

std::string_view to_string(Status status);
std::optional<Status> parse_status(std::string_view text);

/// Outcome of one checked relation or relation family.
///
/// residual is the largest |re| or |im| of lhs - rhs over all coefficients
/// (or matrix entries), serialized losslessly: an exact rational in exact
/// mode. Exact-mode checks pass only on a zero residual; float-mode checks
/// compare against tol times max(1, largest coefficient involved).
struct Report {
  std::string id;
  std::string suite;
  std::string anchor;
  Mode mode = Mode::exact;
  Status status = Status::pass;
  std::string residual = "0";
  std::string detail;
  double ms = 0.0;

  bool passed() const { return status != Status::fail; }

  /// Field-wise, timing included.
  friend bool operator==(const Report&, const Report&) = default;
};

/// Equal in every field except the elapsed time.
bool same_outcome(const Report& lhs, const Report& rhs);

enum class Suite { structure, actions, irrep, pseudo, integrals };

inline constexpr Suite kAllSuites[] = {Suite::structure, Suite::actions, Suite::irrep, Suite::pseudo,
                                       Suite::integrals};

std::string_view to_string(Suite suite);
std::optional<Suite> parse_suite(std::string_view text);

struct VerifyOptions {
  int n_max = 10;
  double tol = 1e-10;
  /// Random basis-function pairs cross-checked against quadrature.
  int quadrature_pairs = 20;
  /// Total degree bound for the moment-vs-quadrature sweep.
  int quadrature_moment_degree = 12;
  std::uint64_t seed = 20211;
};

/// Every catalog relation lhs == rhs, one report each.
template <Scalar F>
std::vector<Report> check_structure(const Params<F>& p, const std::vector<RelationSpec>& relations,
                                    const VerifyOptions& options = {});

/// Compositional catalog vs explicit z, zbar transcription, one report per
/// osp(1/4) generator.
template <Scalar F>
std::vector<Report> check_explicit_forms(const Params<F>& p, const VerifyOptions& options = {});

/// Ladder, gl(2), and osp(1/4) actions on Psi_{n,m} plus the Jordan chain,
/// one report per formula family over all n <= n_max.
template <Scalar F>
std::vector<Report> check_actions(const Params<F>& p, const VerifyOptions& options = {});

/// su(2) and normalized osp(1/4) matrix elements on Phi_{j,mu}. Exact mode
/// compares squared coefficients where the square roots are irrational.
template <Scalar F>
std::vector<Report> check_irrep(const Params<F>& p, const VerifyOptions& options = {});

/// swap_vars(h) == adjoint(h).
template <Scalar F>
Report check_pseudo_hermiticity(const DiffOp<F>& h, std::string id, const VerifyOptions& options = {});

template <Scalar F>
Report check_pseudo_hermiticity(const Params<F>& p, const VerifyOptions& options = {});

/// Norms, biorthogonality, Gram and Jordan blocks, truncated resolution of
/// identity, and the quadrature cross-check (skipped when a <= b).
template <Scalar F>
std::vector<Report> check_integrals(const Params<F>& p, const VerifyOptions& options = {});

/// Runs the selected suites in a fixed order.
template <Scalar F>
std::vector<Report> run_suites(const Params<F>& p, const std::vector<RelationSpec>& relations,
                               const std::set<Suite>& suites, const VerifyOptions& options = {});

}  // namespace cxosc
