#pragma once

#include <vector>

#include "cxosc/params.hpp"
#include "cxosc/poly2.hpp"

namespace cxosc {

/// A model function P(z, zbar) exp(-a z zbar - b zbar^2), stored by its
/// polynomial part P. The envelope is implicit and shared by every function.
///
/// Coefficients are measured in units of the global normalization
/// kappa = sqrt(2a/pi), which is never materialized: all identities are
/// homogeneous of degree one in kappa, and the bilinear form absorbs kappa^2.
template <Scalar F>
struct ReducedFn {
  Poly2<F> poly;

  ReducedFn& operator+=(const ReducedFn& rhs) {
    poly += rhs.poly;
    return *this;
  }
  ReducedFn& operator-=(const ReducedFn& rhs) {
    poly -= rhs.poly;
    return *this;
  }
  ReducedFn& operator*=(const F& c) {
    poly *= c;
    return *this;
  }
  friend ReducedFn operator+(ReducedFn lhs, const ReducedFn& rhs) { return lhs += rhs; }
  friend ReducedFn operator-(ReducedFn lhs, const ReducedFn& rhs) { return lhs -= rhs; }
  friend ReducedFn operator*(const F& c, ReducedFn f) { return f *= c; }

  friend bool operator==(const ReducedFn& lhs, const ReducedFn& rhs)
    requires std::same_as<F, Exact>
  {
    return lhs.poly == rhs.poly;
  }
};

inline ReducedFn<Float> to_float(const ReducedFn<Exact>& f) { return {to_float(f.poly)}; }
inline const ReducedFn<Float>& to_float(const ReducedFn<Float>& f) { return f; }

/// Position (n, m) in the Jordan chain of level n, 0 <= m <= n.
///
/// The su(2) labels are j = n/2 and mu = (2m - n)/2; they are exposed doubled
/// to stay integral.
class BlockIndex {
 public:
  /// Throws std::out_of_range unless 0 <= m <= n.
  BlockIndex(int n, int m);
  /// From doubled labels 2j, 2mu. Throws std::out_of_range when invalid.
  static BlockIndex from_doubled(int two_j, int two_mu);
  static bool valid(int n, int m) { return n >= 0 && m >= 0 && m <= n; }

  int n() const { return n_; }
  int m() const { return m_; }
  int two_j() const { return n_; }
  int two_mu() const { return 2 * m_ - n_; }

  auto operator<=>(const BlockIndex&) const = default;

 private:
  int n_;
  int m_;
};

/// Rising factorial x (x+1) ... (x+k-1); 1 for k = 0.
template <Scalar F>
F pochhammer(const F& x, int k);

/// [alpha_0^(k), ..., alpha_k^(k)] of the associated-function expansion.
template <Scalar F>
std::vector<F> alpha_coeffs(int k);

/// Psi_{n,m} (in units of kappa). m = 0 uses the closed eigenfunction form
/// c_{n,0} zbar^n; m >= 1 uses the associated-function sum.
/// Throws std::out_of_range unless 0 <= m <= n.
template <Scalar F>
ReducedFn<F> build_psi(const Params<F>& p, int n, int m);

/// The associated-function sum evaluated for any 0 <= m <= n, including
/// m = 0 where it must reproduce the eigenfunction.
template <Scalar F>
ReducedFn<F> associated_formula(const Params<F>& p, int n, int m);

/// sqrt(scale_sq) * fn. Exact mode keeps irrational scales squared.
template <Scalar F>
struct ScaledFn {
  ReducedFn<F> fn;
  F scale_sq = from_integer<F>(1);

  bool materialized() const {
    if constexpr (std::same_as<F, Exact>) {
      return scale_sq == from_integer<F>(1);
    } else {
      return true;
    }
  }
};

/// Phi_{j,mu} = sqrt(m!/(n-m)!) Psi_{n,m}. Float mode always materializes the
/// square root; exact mode does so only when it is rational.
template <Scalar F>
ScaledFn<F> build_phi(const Params<F>& p, int n, int m);

}  // namespace cxosc
