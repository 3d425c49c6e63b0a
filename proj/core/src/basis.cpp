#include "cxosc/basis.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace cxosc {

BlockIndex::BlockIndex(int n, int m) : n_(n), m_(m) {
  if (!valid(n, m)) {
    throw std::out_of_range("invalid block index (n=" + std::to_string(n) + ", m=" + std::to_string(m) +
                            "): need 0 <= m <= n");
  }
}

BlockIndex BlockIndex::from_doubled(int two_j, int two_mu) {
  if ((two_j + two_mu) % 2 != 0) throw std::out_of_range("2j and 2mu must have equal parity");
  return BlockIndex(two_j, (two_j + two_mu) / 2);
}

template <Scalar F>
F pochhammer(const F& x, int k) {
  if (k < 0) throw std::invalid_argument("negative Pochhammer length");
  F result = from_integer<F>(1);
  for (int i = 0; i < k; ++i) result *= x + from_integer<F>(i);
  return result;
}

template <Scalar F>
std::vector<F> alpha_coeffs(int k) {
  if (k < 0) throw std::invalid_argument("negative alpha order");
  std::vector<F> alpha(static_cast<std::size_t>(k) + 1);
  alpha[0] = power(from_integer<F>(-2), k);
  F factorial = from_integer<F>(1);
  for (int i = 1; i < k; ++i) {
    factorial *= from_integer<F>(i);
    alpha[i] = power(from_integer<F>(-2), i) * pochhammer(from_integer<F>(k - i + 1), i) * alpha[0] / factorial;
  }
  if (k > 0) alpha[k] = power(from_integer<F>(4), k);
  return alpha;
}

namespace {

template <Scalar F>
F factorial(int n) {
  F r = from_integer<F>(1);
  for (int i = 2; i <= n; ++i) r *= from_integer<F>(i);
  return r;
}

// c_{n,0} / kappa = 4^n (ab)^{n/2}
template <Scalar F>
F eigen_norm(const Params<F>& p, int n) {
  return power(from_integer<F>(4) * p.root_ab(), n);
}

}  // namespace

template <Scalar F>
ReducedFn<F> associated_formula(const Params<F>& p, int n, int m) {
  BlockIndex idx(n, m);
  (void)idx;
  const F two_ab = from_integer<F>(2) * p.a() * p.b();
  const F c_n = eigen_norm(p, n) / (power(from_integer<F>(8) * p.a() * p.b(), n) * factorial<F>(n));
  const int k = n - m;
  const std::vector<F> alpha = alpha_coeffs<F>(k);
  const Poly2<F> linear = Poly2<F>::monomial(1, 0, p.a()) + Poly2<F>::monomial(0, 1, p.b());

  Poly2<F> sum;
  for (int i = 0; i <= k; ++i) {
    const int exponent = 2 * m - n + i;
    F weight = alpha[i] * pochhammer(from_integer<F>(exponent + 1), 2 * n - 2 * m - i);
    if (is_zero(weight)) continue;
    // A nonzero weight forces exponent >= 0: otherwise the Pochhammer factor
    // runs through zero.
    if (exponent < 0) throw std::logic_error("negative power with nonzero weight");
    sum += Poly2<F>::monomial(0, i, weight) * linear.pow(exponent);
  }
  sum *= c_n * power(two_ab, k);
  return {std::move(sum)};
}

template <Scalar F>
ReducedFn<F> build_psi(const Params<F>& p, int n, int m) {
  BlockIndex idx(n, m);
  if (m == 0) return {Poly2<F>::monomial(0, n, eigen_norm(p, n))};
  return associated_formula(p, idx.n(), idx.m());
}

template <Scalar F>
ScaledFn<F> build_phi(const Params<F>& p, int n, int m) {
  ReducedFn<F> psi = build_psi(p, n, m);
  F scale_sq = factorial<F>(m) / factorial<F>(n - m);
  if constexpr (std::same_as<F, Exact>) {
    if (is_rational_square(scale_sq)) {
      psi *= rational_sqrt(scale_sq);
      return {std::move(psi), from_integer<F>(1)};
    }
    return {std::move(psi), scale_sq};
  } else {
    psi *= std::sqrt(scale_sq);
    return {std::move(psi), from_integer<F>(1)};
  }
}

#define CXOSC_INSTANTIATE(F)                                             \
  template F pochhammer(const F&, int);                                  \
  template std::vector<F> alpha_coeffs<F>(int);                          \
  template ReducedFn<F> associated_formula(const Params<F>&, int, int);   \
  template ReducedFn<F> build_psi(const Params<F>&, int, int);           \
  template ScaledFn<F> build_phi(const Params<F>&, int, int);

CXOSC_INSTANTIATE(Exact)
CXOSC_INSTANTIATE(Float)

#undef CXOSC_INSTANTIATE

}  // namespace cxosc
