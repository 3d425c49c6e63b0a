#include "cxosc/poly2.hpp"

#include <algorithm>
#include <stdexcept>

namespace cxosc {

template <Scalar F>
Poly2<F> Poly2<F>::constant(const F& c) {
  return monomial(0, 0, c);
}

template <Scalar F>
Poly2<F> Poly2<F>::monomial(int deg_z, int deg_zbar, const F& c) {
  if (deg_z < 0 || deg_zbar < 0) throw std::invalid_argument("negative monomial degree");
  Poly2 p;
  p.add_term(deg_z, deg_zbar, c);
  return p;
}

template <Scalar F>
F Poly2<F>::coeff(int deg_z, int deg_zbar) const {
  auto it = terms_.find({deg_z, deg_zbar});
  return it == terms_.end() ? F{} : it->second;
}

template <Scalar F>
void Poly2<F>::add_term(int deg_z, int deg_zbar, const F& c) {
  if (cxosc::is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace({deg_z, deg_zbar}, c);
  if (!inserted) {
    it->second += c;
    if (cxosc::is_zero(it->second)) terms_.erase(it);
  }
}

template <Scalar F>
int Poly2<F>::degree() const {
  int d = 0;
  for (const auto& [key, c] : terms_) d = std::max(d, key.first + key.second);
  return d;
}

template <Scalar F>
int Poly2<F>::degree_zbar() const {
  int d = 0;
  for (const auto& [key, c] : terms_) d = std::max(d, key.second);
  return d;
}

template <Scalar F>
Poly2<F>& Poly2<F>::operator+=(const Poly2& rhs) {
  for (const auto& [key, c] : rhs.terms_) add_term(key.first, key.second, c);
  return *this;
}

template <Scalar F>
Poly2<F>& Poly2<F>::operator-=(const Poly2& rhs) {
  for (const auto& [key, c] : rhs.terms_) add_term(key.first, key.second, -c);
  return *this;
}

template <Scalar F>
Poly2<F>& Poly2<F>::operator*=(const F& c) {
  if (cxosc::is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, value] : terms_) value *= c;
  return *this;
}

template <Scalar F>
Poly2<F> Poly2<F>::multiply(const Poly2& lhs, const Poly2& rhs) {
  Poly2 out;
  for (const auto& [kl, cl] : lhs.terms_) {
    for (const auto& [kr, cr] : rhs.terms_) {
      out.add_term(kl.first + kr.first, kl.second + kr.second, cl * cr);
    }
  }
  return out;
}

template <Scalar F>
Poly2<F> Poly2<F>::d_z() const {
  Poly2 out;
  for (const auto& [key, c] : terms_) {
    if (key.first == 0) continue;
    out.add_term(key.first - 1, key.second, c * from_integer<F>(key.first));
  }
  return out;
}

template <Scalar F>
Poly2<F> Poly2<F>::d_zbar() const {
  Poly2 out;
  for (const auto& [key, c] : terms_) {
    if (key.second == 0) continue;
    out.add_term(key.first, key.second - 1, c * from_integer<F>(key.second));
  }
  return out;
}

template <Scalar F>
Poly2<F> Poly2<F>::pow(int k) const {
  if (k < 0) throw std::invalid_argument("negative polynomial power");
  Poly2 result = constant(from_integer<F>(1));
  for (int i = 0; i < k; ++i) result = result * *this;
  return result;
}

template <Scalar F>
F Poly2<F>::evaluate(const F& z, const F& zbar) const {
  F sum{};
  for (const auto& [key, c] : terms_) sum += c * power(z, key.first) * power(zbar, key.second);
  return sum;
}

template <Scalar F>
Magnitude<F> max_coeff(const Poly2<F>& p) {
  Magnitude<F> best{0};
  for (const auto& [key, c] : p.terms()) {
    Magnitude<F> m = magnitude(c);
    if (m > best) best = m;
  }
  return best;
}

template <Scalar F>
bool approx_equal(const Poly2<F>& p, const Poly2<F>& q, double tol) {
  Poly2<F> diff = p - q;
  if constexpr (std::same_as<F, Exact>) {
    (void)tol;
    return diff.is_zero();
  } else {
    double scale = std::max({1.0, max_coeff(p), max_coeff(q)});
    return max_coeff(diff) <= tol * scale;
  }
}

template <Scalar F>
std::string to_string(const Poly2<F>& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [key, c] : p.terms()) {
    if (!out.empty()) out += " + ";
    out += "(" + to_string(c) + ")";
    if (key.first > 0) out += key.first == 1 ? "*z" : "*z^" + std::to_string(key.first);
    if (key.second > 0) out += key.second == 1 ? "*zb" : "*zb^" + std::to_string(key.second);
  }
  return out;
}

Poly2<Float> to_float(const Poly2<Exact>& p) {
  Poly2<Float> out;
  for (const auto& [key, c] : p.terms()) out.add_term(key.first, key.second, to_float(c));
  return out;
}

template class Poly2<Exact>;
template class Poly2<Float>;
template Magnitude<Exact> max_coeff(const Poly2<Exact>&);
template Magnitude<Float> max_coeff(const Poly2<Float>&);
template bool approx_equal(const Poly2<Exact>&, const Poly2<Exact>&, double);
template bool approx_equal(const Poly2<Float>&, const Poly2<Float>&, double);
template std::string to_string(const Poly2<Exact>&);
template std::string to_string(const Poly2<Float>&);

}  // namespace cxosc
