#include "cxosc/gaussint.hpp"

#include <vector>

#include "cxosc/apply.hpp"
#include "cxosc/operators.hpp"

namespace cxosc {

template <Scalar F>
F MomentTable<F>::multiplier(int p, int q) const {
  std::lock_guard lock(mutex_);
  return compute(p, q);
}

// Caller holds mutex_.
template <Scalar F>
F MomentTable<F>::compute(int p, int q) const {
  if (p < 0 || q < 0) return F{};
  if (p == 0 && q == 0) return from_integer<F>(1);
  auto it = cache_.find({p, q});
  if (it != cache_.end()) return it->second;

  const F& a = params_.a();
  const F& b = params_.b();
  F value;
  if (q >= 1) {
    // p I(p-1, q-1) = 2a I(p, q)
    value = p == 0 ? F{} : from_integer<F>(p) / (from_integer<F>(2) * a) * compute(p - 1, q - 1);
  } else {
    // 0 = 2a I(p, 0) + 4b I(p-1, 1)
    value = from_integer<F>(-2) * b / a * compute(p - 1, 1);
  }
  cache_.emplace(std::pair{p, q}, value);
  return value;
}

template <Scalar F>
Moment<F> moment(const Params<F>& p, int p_deg, int q_deg) {
  MomentTable<F> table(p);
  return table.moment(p_deg, q_deg);
}

template <Scalar F>
F inner_product(const MomentTable<F>& table, const ReducedFn<F>& f, const ReducedFn<F>& g) {
  // Collect the product first so each moment is looked up once.
  Poly2<F> product = f.poly * g.poly;
  F sum{};
  for (const auto& [key, c] : product.terms()) {
    F m = table.multiplier(key.first, key.second);
    if (!is_zero(m)) sum += c * m;
  }
  return sum;
}

template <Scalar F>
F inner_product(const Params<F>& p, const ReducedFn<F>& f, const ReducedFn<F>& g) {
  MomentTable<F> table(p);
  return inner_product(table, f, g);
}

template <Scalar F>
Matrix<F> gram_block(const Params<F>& p, int n) {
  if (n < 0) throw std::out_of_range("negative level");
  MomentTable<F> table(p);
  std::vector<ReducedFn<F>> psi;
  for (int m = 0; m <= n; ++m) psi.push_back(build_psi(p, n, m));
  Matrix<F> gram(n + 1, n + 1);
  for (int m = 0; m <= n; ++m) {
    for (int k = m; k <= n; ++k) {
      gram(m, k) = inner_product(table, psi[m], psi[k]);
      gram(k, m) = gram(m, k);
    }
  }
  return gram;
}

template <Scalar F>
Matrix<F> h_block(const Params<F>& p, int n) {
  if (n < 0) throw std::out_of_range("negative level");
  MomentTable<F> table(p);
  const DiffOp<F> h = make_operator(p, Generator::H);
  std::vector<ReducedFn<F>> psi;
  std::vector<ReducedFn<F>> h_psi;
  for (int m = 0; m <= n; ++m) {
    psi.push_back(build_psi(p, n, m));
    h_psi.push_back(apply(p, h, psi.back()));
  }
  Matrix<F> out(n + 1, n + 1);
  for (int k = 0; k <= n; ++k) {
    for (int m = 0; m <= n; ++m) out(k, m) = inner_product(table, psi[n - k], h_psi[m]);
  }
  return out;
}

template <Scalar F>
Matrix<F> anti_identity(int n) {
  Matrix<F> m(n + 1, n + 1);
  for (int i = 0; i <= n; ++i) m(i, n - i) = from_integer<F>(1);
  return m;
}

template <Scalar F>
Matrix<F> jordan_block(const Params<F>& p, int n) {
  Matrix<F> m(n + 1, n + 1);
  for (int i = 0; i <= n; ++i) {
    m(i, i) = p.energy(n);
    if (i < n) m(i, i + 1) = from_integer<F>(1);
  }
  return m;
}

template class MomentTable<Exact>;
template class MomentTable<Float>;

#define CXOSC_INSTANTIATE(F)                                                            \
  template Moment<F> moment(const Params<F>&, int, int);                                \
  template F inner_product(const MomentTable<F>&, const ReducedFn<F>&, const ReducedFn<F>&); \
  template F inner_product(const Params<F>&, const ReducedFn<F>&, const ReducedFn<F>&); \
  template Matrix<F> gram_block(const Params<F>&, int);                                 \
  template Matrix<F> h_block(const Params<F>&, int);                                    \
  template Matrix<F> anti_identity<F>(int);                                             \
  template Matrix<F> jordan_block(const Params<F>&, int);

CXOSC_INSTANTIATE(Exact)
CXOSC_INSTANTIATE(Float)

#undef CXOSC_INSTANTIATE

}  // namespace cxosc
