#pragma once

#include <map>
#include <mutex>
#include <utility>

#include "cxosc/basis.hpp"
#include "cxosc/matrix.hpp"
#include "cxosc/params.hpp"

namespace cxosc {

/// I(p, q) = integral of z^p zbar^q exp(-2a z zbar - 2b zbar^2) dx1 dx2,
/// stored as a multiple of the unit pi/(2a).
template <Scalar F>
struct Moment {
  int p = 0;
  int q = 0;
  F multiplier;
};

/// Memoized Gaussian moments filled by integration by parts:
///   p I(p-1, q) = 2a I(p, q+1)
///   q I(p, q-1) = 2a I(p+1, q) + 4b I(p, q+1)
/// with I(0, 0) = pi/(2a). Negative indices give zero.
///
/// Lookups are serialized by an internal mutex, so one table may be shared
/// across threads.
template <Scalar F>
class MomentTable {
 public:
  explicit MomentTable(const Params<F>& p) : params_(p) {}

  /// Multiplier of pi/(2a) for I(p, q).
  F multiplier(int p, int q) const;
  Moment<F> moment(int p, int q) const { return {p, q, multiplier(p, q)}; }

 private:
  F compute(int p, int q) const;

  Params<F> params_;
  mutable std::mutex mutex_;
  mutable std::map<std::pair<int, int>, F> cache_;
};

template <Scalar F>
Moment<F> moment(const Params<F>& p, int p_deg, int q_deg);

/// The bilinear form <<f|g>> = integral f g dx1 dx2 (no conjugation).
///
/// With kappa^2 = 2a/pi from the implicit normalization and the moment unit
/// pi/(2a), the result is the plain sum of coefficient products times
/// moment multipliers.
template <Scalar F>
F inner_product(const MomentTable<F>& table, const ReducedFn<F>& f, const ReducedFn<F>& g);

template <Scalar F>
F inner_product(const Params<F>& p, const ReducedFn<F>& f, const ReducedFn<F>& g);

/// entries(m, m') = <<Psi_{n,m}|Psi_{n,m'}>>.
template <Scalar F>
Matrix<F> gram_block(const Params<F>& p, int n);

/// entries(k, m) = <<Psi_{n,n-k}|H Psi_{n,m}>>.
template <Scalar F>
Matrix<F> h_block(const Params<F>& p, int n);

/// (n+1) x (n+1) matrix with ones on the anti-diagonal.
template <Scalar F>
Matrix<F> anti_identity(int n);

/// E_n on the diagonal and ones on the superdiagonal.
template <Scalar F>
Matrix<F> jordan_block(const Params<F>& p, int n);

extern template class MomentTable<Exact>;
extern template class MomentTable<Float>;

}  // namespace cxosc
