#include "cxosc/apply.hpp"

#include <map>
#include <utility>

namespace cxosc {

template <Scalar F>
ReducedFn<F> apply(const Params<F>& p, const DiffOp<F>& op, const ReducedFn<F>& f) {
  const Poly2<F> shift_z = Poly2<F>::monomial(0, 1, -p.a());
  const Poly2<F> shift_zbar = Poly2<F>::monomial(1, 0, -p.a()) + Poly2<F>::monomial(0, 1, from_integer<F>(-2) * p.b());
  auto cov_z = [&](const Poly2<F>& q) { return q.d_z() + shift_z * q; };
  auto cov_zbar = [&](const Poly2<F>& q) { return q.d_zbar() + shift_zbar * q; };

  // Covariant derivatives commute, so D_z^k D_zbar^l f is shared by every
  // term with the same derivative orders.
  std::map<std::pair<int, int>, Poly2<F>> derived;

  ReducedFn<F> out;
  for (const auto& [w, c] : op.terms()) {
    auto key = std::pair{w.dz, w.dzbar};
    auto it = derived.find(key);
    if (it == derived.end()) {
      Poly2<F> q = f.poly;
      for (int i = 0; i < w.dzbar && !q.is_zero(); ++i) q = cov_zbar(q);
      for (int i = 0; i < w.dz && !q.is_zero(); ++i) q = cov_z(q);
      it = derived.emplace(key, std::move(q)).first;
    }
    out.poly += Poly2<F>::monomial(w.z, w.zbar, c) * it->second;
  }
  return out;
}

template <Scalar F>
DiffOp<F> conjugate_by_envelope(const Params<F>& p, const DiffOp<F>& op) {
  using Op = DiffOp<F>;
  const Op cov_z = Op::d_z() - p.a() * Op::zbar();
  const Op cov_zbar = Op::d_zbar() - p.a() * Op::z() - (from_integer<F>(2) * p.b()) * Op::zbar();
  Op out;
  for (const auto& [w, c] : op.terms()) {
    Op term = Op::term({w.z, w.zbar, 0, 0}, c);
    for (int i = 0; i < w.dz; ++i) term = term * cov_z;
    for (int i = 0; i < w.dzbar; ++i) term = term * cov_zbar;
    out += term;
  }
  return out;
}

template ReducedFn<Exact> apply(const Params<Exact>&, const DiffOp<Exact>&, const ReducedFn<Exact>&);
template ReducedFn<Float> apply(const Params<Float>&, const DiffOp<Float>&, const ReducedFn<Float>&);
template DiffOp<Exact> conjugate_by_envelope(const Params<Exact>&, const DiffOp<Exact>&);
template DiffOp<Float> conjugate_by_envelope(const Params<Float>&, const DiffOp<Float>&);

}  // namespace cxosc
