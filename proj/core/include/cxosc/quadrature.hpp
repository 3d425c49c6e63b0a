#pragma once

#include <stdexcept>

#include "cxosc/basis.hpp"
#include "cxosc/params.hpp"

namespace cxosc {

/// The tensor Gauss-Hermite oracle needs a > b so that both real Gaussian
/// factors decay.
class OracleUnavailable : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Per-axis rule order: max(32, total degree + 8).
int default_quadrature_order(int total_degree);

/// Numerical integral of poly(z, zbar) exp(-2a z zbar - 2b zbar^2) over the
/// plane with z = x1 + i x2, zbar = x1 - i x2.
///
/// The weight exp(-2(a+b) x1^2 - 2(a-b) x2^2) is integrated by a tensor
/// Gauss-Hermite rule; exp(4ib x1 x2) and the polynomial are the smooth
/// factor. order <= 0 selects default_quadrature_order.
Float gaussian_integral(const Params<Float>& p, const Poly2<Float>& poly, int order = 0);

/// Same rule applied to |poly| exp(-2(a+b) x1^2 - 2(a-b) x2^2): the L1 scale
/// of the integrand, used to normalize errors of vanishing integrals.
double gaussian_abs_integral(const Params<Float>& p, const Poly2<Float>& poly, int order = 0);

/// kappa^2 times the integral of f g exp(2G): directly comparable with
/// inner_product on the same functions.
Float quadrature_oracle(const Params<Float>& p, const ReducedFn<Float>& f, const ReducedFn<Float>& g,
                        int order = 0);

}  // namespace cxosc
