#pragma once

#include <stdexcept>
#include <string>

#include "cxosc/scalar.hpp"

namespace cxosc {

/// Raised for parameter regimes outside the supported nonseparable branch
/// with b > 0.
class UnsupportedBranch : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Model parameters a = lambda/2 and b = g/(4 lambda), both positive.
///
/// The square roots of a and b are stored alongside so that every
/// sqrt(ab), sqrt(a/b), sqrt(b/a) factor is a field element. In exact mode
/// this restricts a = p^2, b = q^2 with p, q positive rationals.
template <Scalar F>
class Params {
 public:
  /// a = root_a^2, b = root_b^2. Throws UnsupportedBranch unless both roots
  /// are real and positive.
  static Params from_roots(const F& root_a, const F& root_b);
  /// Exact mode requires a and b to be squares of rationals.
  static Params from_ab(const F& a, const F& b);

  const F& a() const { return a_; }
  const F& b() const { return b_; }
  const F& root_a() const { return root_a_; }
  const F& root_b() const { return root_b_; }
  F root_ab() const { return root_a_ * root_b_; }
  F root_a_over_b() const { return root_a_ / root_b_; }
  F root_b_over_a() const { return root_b_ / root_a_; }

  F lambda() const { return from_integer<F>(2) * a_; }
  /// Coefficient g of zbar^2 in the (z, zbar) Hamiltonian: g = 4 lambda b.
  F g() const { return from_integer<F>(4) * lambda() * b_; }
  /// E_n = 4a(n + 1).
  F energy(int n) const { return from_integer<F>(4) * a_ * from_integer<F>(n + 1); }

  std::string describe() const;

 private:
  Params(F root_a, F root_b);

  F root_a_;
  F root_b_;
  F a_;
  F b_;
};

/// Builds parameters from oscillator frequencies on the nonseparable branch,
/// lambda = sqrt((w1^2 + w2^2)/2), g = (w1^2 - w2^2)/2. Requires w1 > w2 > 0;
/// otherwise throws UnsupportedBranch (b <= 0).
Params<Float> params_from_frequencies(double omega1, double omega2);

Params<Float> to_float(const Params<Exact>& p);
inline const Params<Float>& to_float(const Params<Float>& p) { return p; }

extern template class Params<Exact>;
extern template class Params<Float>;

}  // namespace cxosc
