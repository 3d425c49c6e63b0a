#include "cxosc/operators.hpp"

#include <stdexcept>
#include <string>

namespace cxosc {

namespace {

struct NamedGenerator {
  Generator g;
  std::string_view name;
};

constexpr std::array<NamedGenerator, kAllGenerators.size()> kNames = {{
    {Generator::H, "H"},
    {Generator::A_plus, "A+"},
    {Generator::A_minus, "A-"},
    {Generator::B_plus, "B+"},
    {Generator::B_minus, "B-"},
    {Generator::R, "R"},
    {Generator::S, "S"},
    {Generator::T, "T"},
    {Generator::U, "U"},
    {Generator::J0, "J0"},
    {Generator::J_plus, "J+"},
    {Generator::J_minus, "J-"},
    {Generator::K, "K"},
    {Generator::a1_plus, "a1+"},
    {Generator::a1_minus, "a1-"},
    {Generator::a2_plus, "a2+"},
    {Generator::a2_minus, "a2-"},
    {Generator::D_plus_11, "D+11"},
    {Generator::D_plus_12, "D+12"},
    {Generator::D_plus_22, "D+22"},
    {Generator::D_minus_11, "D-11"},
    {Generator::D_minus_12, "D-12"},
    {Generator::D_minus_22, "D-22"},
    {Generator::E11, "E11"},
    {Generator::E12, "E12"},
    {Generator::E21, "E21"},
    {Generator::E22, "E22"},
}};

template <Scalar F>
F num(long n, long d = 1) {
  return from_ratio<F>(n, d);
}

// Builds catalog entries on demand, memoizing within one construction.
template <Scalar F>
class Builder {
 public:
  explicit Builder(const Params<F>& p) : p_(p) {}

  const DiffOp<F>& get(Generator g) {
    auto& slot = cache_[static_cast<std::size_t>(g)];
    if (!slot) slot = build(g);
    return *slot;
  }

 private:
  DiffOp<F> build(Generator g) {
    using Op = DiffOp<F>;
    const F& a = p_.a();
    const F& b = p_.b();
    const Op one = Op::identity();
    switch (g) {
      case Generator::H:
        return num<F>(-4) * (Op::d_z() * Op::d_zbar()) +
               Op::term({1, 1, 0, 0}, num<F>(4) * a * a) + Op::term({0, 2, 0, 0}, num<F>(8) * a * b);
      case Generator::A_plus:
        return Op::d_z() - a * Op::zbar();
      case Generator::A_minus:
        return Op::d_z() + a * Op::zbar();
      case Generator::B_plus:
        return Op::d_zbar() - a * Op::z() - num<F>(2) * b * Op::zbar();
      case Generator::B_minus:
        return Op::d_zbar() + a * Op::z() + num<F>(2) * b * Op::zbar();
      case Generator::R:
        return get(Generator::A_plus) * get(Generator::A_minus);
      case Generator::S:
        return get(Generator::B_plus) * get(Generator::B_minus);
      case Generator::T:
        return get(Generator::A_plus) * get(Generator::B_minus) - get(Generator::B_plus) * get(Generator::A_minus);
      case Generator::U:
        return get(Generator::A_plus) * get(Generator::B_minus) + get(Generator::B_plus) * get(Generator::A_minus);
      case Generator::J0:
        return (num<F>(1) / (num<F>(4) * a)) * get(Generator::T);
      case Generator::J_plus: {
        Op inner = get(Generator::S) + (b * b / (a * a)) * get(Generator::R) - (b / a) * get(Generator::U);
        return (num<F>(-1) / (num<F>(16) * a * b)) * inner;
      }
      case Generator::J_minus:
        return (num<F>(-4) * b / a) * get(Generator::R);
      case Generator::K: {
        Op inner = (num<F>(2) * b / a) * get(Generator::R) - get(Generator::U) + (num<F>(2) * a) * one;
        return (num<F>(1) / (num<F>(2) * a)) * inner;
      }
      case Generator::a1_plus: {
        F scale = num<F>(1) / (num<F>(4) * a * p_.root_ab());
        return scale * (b * get(Generator::A_plus) - a * get(Generator::B_plus));
      }
      case Generator::a1_minus:
        return (num<F>(2) * p_.root_b_over_a()) * get(Generator::A_minus);
      case Generator::a2_plus:
        return (num<F>(-2) * p_.root_b_over_a()) * get(Generator::A_plus);
      case Generator::a2_minus: {
        F scale = num<F>(-1) / (num<F>(4) * a * p_.root_ab());
        return scale * (b * get(Generator::A_minus) - a * get(Generator::B_minus));
      }
      case Generator::D_plus_11:
        return get(Generator::a1_plus) * get(Generator::a1_plus);
      case Generator::D_plus_12:
        return get(Generator::a1_plus) * get(Generator::a2_plus);
      case Generator::D_plus_22:
        return get(Generator::a2_plus) * get(Generator::a2_plus);
      case Generator::D_minus_11:
        return get(Generator::a1_minus) * get(Generator::a1_minus);
      case Generator::D_minus_12:
        return get(Generator::a1_minus) * get(Generator::a2_minus);
      case Generator::D_minus_22:
        return get(Generator::a2_minus) * get(Generator::a2_minus);
      case Generator::E11:
        return num<F>(1, 2) * get(Generator::K) + get(Generator::J0);
      case Generator::E22:
        return num<F>(1, 2) * get(Generator::K) - get(Generator::J0);
      case Generator::E12:
        return get(Generator::J_plus);
      case Generator::E21:
        return get(Generator::J_minus);
    }
    throw std::invalid_argument("unknown generator");
  }

  const Params<F>& p_;
  std::array<std::optional<DiffOp<F>>, kAllGenerators.size()> cache_;
};

}  // namespace

std::string_view name(Generator g) { return kNames[static_cast<std::size_t>(g)].name; }

std::optional<Generator> parse_generator(std::string_view text) {
  for (const auto& entry : kNames) {
    if (entry.name == text) return entry.g;
  }
  return std::nullopt;
}

template <Scalar F>
DiffOp<F> make_operator(const Params<F>& p, Generator g) {
  Builder<F> builder(p);
  return builder.get(g);
}

template <Scalar F>
DiffOp<F> make_operator(const Params<F>& p, std::string_view text) {
  auto g = parse_generator(text);
  if (!g) throw std::invalid_argument("unknown operator name: " + std::string(text));
  return make_operator(p, *g);
}

template <Scalar F>
DiffOp<F> explicit_form(const Params<F>& p, Generator g) {
  using Op = DiffOp<F>;
  const F& a = p.a();
  const F& b = p.b();
  const Op z = Op::z();
  const Op zb = Op::zbar();
  const Op dz = Op::d_z();
  const Op dzb = Op::d_zbar();
  const Op one = Op::identity();
  // (a z + b zbar) and (b d_z - a d_zbar) recur throughout.
  const Op lin = a * z + b * zb;
  const Op mix = b * dz - a * dzb;
  const F inv_4a_rootab = num<F>(1) / (num<F>(4) * a * p.root_ab());
  const F inv_16a3b = num<F>(1) / (num<F>(16) * a * a * a * b);
  const F a2 = a * a;

  switch (g) {
    case Generator::a1_plus:
      return inv_4a_rootab * (mix + a * lin);
    case Generator::a1_minus:
      return (num<F>(2) * p.root_b_over_a()) * (dz + a * zb);
    case Generator::a2_plus:
      return (num<F>(-2) * p.root_b_over_a()) * (dz - a * zb);
    case Generator::a2_minus:
      return -inv_4a_rootab * (mix - a * lin);
    case Generator::J0:
      return (num<F>(1) / (num<F>(2) * a)) * ((a * z + num<F>(2) * b * zb) * dz - a * (zb * dzb));
    case Generator::J_plus:
      return -inv_16a3b * (mix * mix - a2 * (lin * lin));
    case Generator::J_minus:
      return (num<F>(-4) * b / a) * (dz * dz - a2 * (zb * zb));
    case Generator::K:
      return (num<F>(1) / a2) * (b * (dz * dz) - a * (dz * dzb) + a2 * (zb * lin));
    case Generator::D_plus_11:
      return inv_16a3b * (mix * mix + (num<F>(2) * a) * (lin * mix) + a2 * (lin * lin));
    case Generator::D_plus_12:
      return (num<F>(-1) / (num<F>(2) * a2)) *
             (b * (dz * dz) - a * (dz * dzb) + a2 * (z * dz + zb * dzb) - a2 * (zb * lin) + a2 * one);
    case Generator::D_plus_22:
      return (num<F>(4) * b / a) * (dz * dz - (num<F>(2) * a) * (zb * dz) + a2 * (zb * zb));
    case Generator::D_minus_11:
      return (num<F>(4) * b / a) * (dz * dz + (num<F>(2) * a) * (zb * dz) + a2 * (zb * zb));
    case Generator::D_minus_12:
      return (num<F>(-1) / (num<F>(2) * a2)) *
             (b * (dz * dz) - a * (dz * dzb) - a2 * (z * dz + zb * dzb) - a2 * (zb * lin) - a2 * one);
    case Generator::D_minus_22:
      return inv_16a3b * (mix * mix - (num<F>(2) * a) * (lin * mix) + a2 * (lin * lin));
    default:
      break;
  }
  throw std::invalid_argument("no explicit z, zbar form for " + std::string(name(g)));
}

template <Scalar F>
DiffOp<F> explicit_form(const Params<F>& p, std::string_view text) {
  auto g = parse_generator(text);
  if (!g) throw std::invalid_argument("unknown operator name: " + std::string(text));
  return explicit_form(p, *g);
}

template <Scalar F>
OperatorCatalog<F>::OperatorCatalog(const Params<F>& p) : params_(p) {
  Builder<F> builder(params_);
  for (Generator g : kAllGenerators) ops_[static_cast<std::size_t>(g)] = builder.get(g);
}

template class OperatorCatalog<Exact>;
template class OperatorCatalog<Float>;

#define CXOSC_INSTANTIATE(F)                                                \
  template DiffOp<F> make_operator(const Params<F>&, Generator);            \
  template DiffOp<F> make_operator(const Params<F>&, std::string_view);     \
  template DiffOp<F> explicit_form(const Params<F>&, Generator);            \
  template DiffOp<F> explicit_form(const Params<F>&, std::string_view);

CXOSC_INSTANTIATE(Exact)
CXOSC_INSTANTIATE(Float)

#undef CXOSC_INSTANTIATE

}  // namespace cxosc
