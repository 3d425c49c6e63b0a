#include "cxosc/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numbers>
#include <vector>

#include <gsl/gsl_integration.h>

namespace cxosc {

namespace {

struct Rule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Nodes and weights for integral of h(x) exp(-alpha x^2) dx.
Rule hermite_rule(int order, double alpha) {
  using Workspace = std::unique_ptr<gsl_integration_fixed_workspace, decltype(&gsl_integration_fixed_free)>;
  Workspace ws(gsl_integration_fixed_alloc(gsl_integration_fixed_hermite, static_cast<std::size_t>(order), 0.0,
                                           alpha, 0.0, 0.0),
               &gsl_integration_fixed_free);
  if (!ws) throw std::runtime_error("failed to allocate Gauss-Hermite rule");
  const double* x = gsl_integration_fixed_nodes(ws.get());
  const double* w = gsl_integration_fixed_weights(ws.get());
  Rule rule;
  rule.nodes.assign(x, x + order);
  rule.weights.assign(w, w + order);
  return rule;
}

template <class Integrand>
auto integrate(const Params<Float>& p, int order, Integrand&& integrand) {
  const double a = p.a().real();
  const double b = p.b().real();
  if (!(a > b)) throw OracleUnavailable("quadrature oracle requires a > b");
  const Rule r1 = hermite_rule(order, 2.0 * (a + b));
  const Rule r2 = hermite_rule(order, 2.0 * (a - b));
  decltype(integrand(0.0, 0.0)) sum{};
  for (int i = 0; i < order; ++i) {
    for (int j = 0; j < order; ++j) {
      sum += r1.weights[i] * r2.weights[j] * integrand(r1.nodes[i], r2.nodes[j]);
    }
  }
  return sum;
}

}  // namespace

int default_quadrature_order(int total_degree) { return std::max(32, total_degree + 8); }

Float gaussian_integral(const Params<Float>& p, const Poly2<Float>& poly, int order) {
  if (order <= 0) order = default_quadrature_order(poly.degree());
  const double b = p.b().real();
  return integrate(p, order, [&](double x1, double x2) {
    const Float z{x1, x2};
    const Float zbar{x1, -x2};
    const Float phase = std::exp(Float{0.0, 4.0 * b * x1 * x2});
    return poly.evaluate(z, zbar) * phase;
  });
}

double gaussian_abs_integral(const Params<Float>& p, const Poly2<Float>& poly, int order) {
  if (order <= 0) order = default_quadrature_order(poly.degree());
  return integrate(p, order, [&](double x1, double x2) { return std::abs(poly.evaluate({x1, x2}, {x1, -x2})); });
}

Float quadrature_oracle(const Params<Float>& p, const ReducedFn<Float>& f, const ReducedFn<Float>& g, int order) {
  if (order <= 0) order = default_quadrature_order(f.poly.degree() + g.poly.degree());
  const double b = p.b().real();
  const double kappa_sq = 2.0 * p.a().real() / std::numbers::pi;
  Float sum = integrate(p, order, [&](double x1, double x2) {
    const Float z{x1, x2};
    const Float zbar{x1, -x2};
    const Float phase = std::exp(Float{0.0, 4.0 * b * x1 * x2});
    return f.poly.evaluate(z, zbar) * g.poly.evaluate(z, zbar) * phase;
  });
  return kappa_sq * sum;
}

}  // namespace cxosc
