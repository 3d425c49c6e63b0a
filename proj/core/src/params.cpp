#include "cxosc/params.hpp"

#include <cmath>

namespace cxosc {

namespace {

bool positive_real(const Exact& x) { return x.is_real() && sgn(x.re()) > 0; }
bool positive_real(const Float& x) { return x.imag() == 0.0 && x.real() > 0.0 && std::isfinite(x.real()); }

}  // namespace

template <Scalar F>
Params<F>::Params(F root_a, F root_b)
    : root_a_(std::move(root_a)), root_b_(std::move(root_b)), a_(root_a_ * root_a_), b_(root_b_ * root_b_) {}

template <Scalar F>
Params<F> Params<F>::from_roots(const F& root_a, const F& root_b) {
  if (!positive_real(root_a)) throw UnsupportedBranch("a must be positive: sqrt(a) = " + to_string(root_a));
  if (!positive_real(root_b)) {
    throw UnsupportedBranch("unsupported branch: b must be positive, sqrt(b) = " + to_string(root_b));
  }
  return Params(root_a, root_b);
}

template <Scalar F>
Params<F> Params<F>::from_ab(const F& a, const F& b) {
  if (!positive_real(a)) throw UnsupportedBranch("a must be positive: a = " + to_string(a));
  if (!positive_real(b)) throw UnsupportedBranch("unsupported branch: b must be positive, b = " + to_string(b));
  if constexpr (std::same_as<F, Exact>) {
    if (!is_rational_square(a) || !is_rational_square(b)) {
      throw std::invalid_argument("exact mode requires a and b to be squares of rationals");
    }
    return Params(rational_sqrt(a), rational_sqrt(b));
  } else {
    return Params(std::sqrt(a), std::sqrt(b));
  }
}

template <Scalar F>
std::string Params<F>::describe() const {
  return "a=" + to_string(a_) + " b=" + to_string(b_);
}

Params<Float> params_from_frequencies(double omega1, double omega2) {
  if (!(omega1 > 0.0) || !(omega2 > 0.0)) throw std::invalid_argument("frequencies must be positive");
  if (!(omega1 > omega2)) {
    throw UnsupportedBranch("unsupported branch: need omega1 > omega2 so that g > 0 and b > 0");
  }
  double w1 = omega1 * omega1;
  double w2 = omega2 * omega2;
  double lambda = std::sqrt((w1 + w2) / 2.0);
  double g = (w1 - w2) / 2.0;
  return Params<Float>::from_ab(Float(lambda / 2.0), Float(g / (4.0 * lambda)));
}

Params<Float> to_float(const Params<Exact>& p) {
  return Params<Float>::from_roots(to_float(p.root_a()), to_float(p.root_b()));
}

template class Params<Exact>;
template class Params<Float>;

}  // namespace cxosc
