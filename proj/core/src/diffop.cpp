#include "cxosc/diffop.hpp"

#include <algorithm>

namespace cxosc {

namespace {

long binomial(int n, int k) {
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// n (n-1) ... (n-k+1)
long falling(int n, int k) {
  long r = 1;
  for (int i = 0; i < k; ++i) r *= n - i;
  return r;
}

}  // namespace

template <Scalar F>
DiffOp<F> DiffOp<F>::scalar(const F& c) {
  return term({}, c);
}

template <Scalar F>
DiffOp<F> DiffOp<F>::term(const OpMonomial& word, const F& c) {
  DiffOp op;
  op.add_term(word, c);
  return op;
}

template <Scalar F>
DiffOp<F> DiffOp<F>::multiplication(const Poly2<F>& p) {
  DiffOp op;
  for (const auto& [key, c] : p.terms()) op.add_term({key.first, key.second, 0, 0}, c);
  return op;
}

template <Scalar F>
F DiffOp<F>::coeff(const OpMonomial& word) const {
  auto it = terms_.find(word);
  return it == terms_.end() ? F{} : it->second;
}

template <Scalar F>
void DiffOp<F>::add_term(const OpMonomial& word, const F& c) {
  if (cxosc::is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(word, c);
  if (!inserted) {
    it->second += c;
    if (cxosc::is_zero(it->second)) terms_.erase(it);
  }
}

template <Scalar F>
DiffOp<F>& DiffOp<F>::operator+=(const DiffOp& rhs) {
  for (const auto& [word, c] : rhs.terms_) add_term(word, c);
  return *this;
}

template <Scalar F>
DiffOp<F>& DiffOp<F>::operator-=(const DiffOp& rhs) {
  for (const auto& [word, c] : rhs.terms_) add_term(word, -c);
  return *this;
}

template <Scalar F>
DiffOp<F>& DiffOp<F>::operator*=(const F& c) {
  if (cxosc::is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& [word, value] : terms_) value *= c;
  return *this;
}

// d_z^k z^m = sum_r C(k, r) m!/(m-r)! z^(m-r) d_z^(k-r), and likewise for zbar.
template <Scalar F>
DiffOp<F> DiffOp<F>::compose(const DiffOp& lhs, const DiffOp& rhs) {
  DiffOp out;
  for (const auto& [wl, cl] : lhs.terms_) {
    for (const auto& [wr, cr] : rhs.terms_) {
      F base = cl * cr;
      for (int r = 0; r <= std::min(wl.dz, wr.z); ++r) {
        long cz = binomial(wl.dz, r) * falling(wr.z, r);
        for (int s = 0; s <= std::min(wl.dzbar, wr.zbar); ++s) {
          long czb = binomial(wl.dzbar, s) * falling(wr.zbar, s);
          OpMonomial word{wl.z + wr.z - r, wl.zbar + wr.zbar - s, wl.dz - r + wr.dz,
                          wl.dzbar - s + wr.dzbar};
          out.add_term(word, base * from_integer<F>(cz * czb));
        }
      }
    }
  }
  return out;
}

template <Scalar F>
DiffOp<F> commutator(const DiffOp<F>& lhs, const DiffOp<F>& rhs) {
  return lhs * rhs - rhs * lhs;
}

template <Scalar F>
DiffOp<F> anticommutator(const DiffOp<F>& lhs, const DiffOp<F>& rhs) {
  return lhs * rhs + rhs * lhs;
}

template <Scalar F>
DiffOp<F> adjoint(const DiffOp<F>& op) {
  DiffOp<F> out;
  for (const auto& [w, c] : op.terms()) {
    F sign = ((w.dz + w.dzbar) % 2 == 0) ? from_integer<F>(1) : from_integer<F>(-1);
    auto derivs = DiffOp<F>::term({0, 0, w.dzbar, w.dz}, sign * conj(c));
    auto mults = DiffOp<F>::term({w.zbar, w.z, 0, 0});
    out += derivs * mults;
  }
  return out;
}

template <Scalar F>
DiffOp<F> swap_vars(const DiffOp<F>& op) {
  DiffOp<F> out;
  for (const auto& [w, c] : op.terms()) out.add_term({w.zbar, w.z, w.dzbar, w.dz}, c);
  return out;
}

template <Scalar F>
Poly2<F> act(const DiffOp<F>& op, const Poly2<F>& p) {
  Poly2<F> out;
  for (const auto& [w, c] : op.terms()) {
    Poly2<F> q = p;
    for (int i = 0; i < w.dzbar && !q.is_zero(); ++i) q = q.d_zbar();
    for (int i = 0; i < w.dz && !q.is_zero(); ++i) q = q.d_z();
    out += Poly2<F>::monomial(w.z, w.zbar, c) * q;
  }
  return out;
}

template <Scalar F>
Magnitude<F> max_coeff(const DiffOp<F>& op) {
  Magnitude<F> best{0};
  for (const auto& [w, c] : op.terms()) {
    Magnitude<F> m = magnitude(c);
    if (m > best) best = m;
  }
  return best;
}

template <Scalar F>
bool approx_equal(const DiffOp<F>& lhs, const DiffOp<F>& rhs, double tol) {
  DiffOp<F> diff = lhs - rhs;
  if constexpr (std::same_as<F, Exact>) {
    (void)tol;
    return diff.is_zero();
  } else {
    double scale = std::max({1.0, max_coeff(lhs), max_coeff(rhs)});
    return max_coeff(diff) <= tol * scale;
  }
}

template <Scalar F>
std::string to_string(const DiffOp<F>& op) {
  if (op.is_zero()) return "0";
  auto factor = [](std::string_view name, int power) -> std::string {
    if (power == 0) return "";
    std::string s = "*" + std::string(name);
    if (power > 1) s += "^" + std::to_string(power);
    return s;
  };
  std::string out;
  for (const auto& [w, c] : op.terms()) {
    if (!out.empty()) out += " + ";
    out += "(" + to_string(c) + ")" + factor("z", w.z) + factor("zb", w.zbar) + factor("dz", w.dz) +
           factor("dzb", w.dzbar);
  }
  return out;
}

DiffOp<Float> to_float(const DiffOp<Exact>& op) {
  DiffOp<Float> out;
  for (const auto& [w, c] : op.terms()) out.add_term(w, to_float(c));
  return out;
}

template class DiffOp<Exact>;
template class DiffOp<Float>;

#define CXOSC_INSTANTIATE(F)                                                  \
  template DiffOp<F> commutator(const DiffOp<F>&, const DiffOp<F>&);          \
  template DiffOp<F> anticommutator(const DiffOp<F>&, const DiffOp<F>&);      \
  template DiffOp<F> adjoint(const DiffOp<F>&);                               \
  template DiffOp<F> swap_vars(const DiffOp<F>&);                             \
  template Poly2<F> act(const DiffOp<F>&, const Poly2<F>&);                   \
  template Magnitude<F> max_coeff(const DiffOp<F>&);                          \
  template bool approx_equal(const DiffOp<F>&, const DiffOp<F>&, double);     \
  template std::string to_string(const DiffOp<F>&);

CXOSC_INSTANTIATE(Exact)
CXOSC_INSTANTIATE(Float)

#undef CXOSC_INSTANTIATE

}  // namespace cxosc
