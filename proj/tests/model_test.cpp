#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "cxosc/apply.hpp"
#include "cxosc/basis.hpp"
#include "cxosc/operators.hpp"
#include "support.hpp"

namespace cxosc {
namespace {

using testing::Gen;
using Op = DiffOp<Exact>;
using Poly = Poly2<Exact>;

Exact r(long n, long d = 1) { return Exact::ratio(n, d); }

TEST(Params, DefaultPoint) {
  const auto p = testing::default_exact();
  EXPECT_EQ(p.a(), Exact(1));
  EXPECT_EQ(p.b(), r(1, 4));
  EXPECT_EQ(p.lambda(), Exact(2));
  EXPECT_EQ(p.g(), Exact(2));
  EXPECT_EQ(p.root_ab(), r(1, 2));
  EXPECT_EQ(p.root_a_over_b(), Exact(2));
  EXPECT_EQ(p.root_b_over_a(), r(1, 2));
  EXPECT_EQ(p.energy(3), Exact(16));
}

TEST(Params, RejectsInadmissibleValues) {
  EXPECT_THROW(Params<Exact>::from_ab(Exact(2), r(1, 4)), std::invalid_argument);
  EXPECT_THROW(Params<Exact>::from_roots(Exact(-1), r(1, 2)), UnsupportedBranch);
  EXPECT_THROW(Params<Exact>::from_roots(Exact(1), Exact(0)), UnsupportedBranch);
  EXPECT_THROW(Params<Float>::from_ab(Float(1.0), Float(-0.25)), UnsupportedBranch);
  EXPECT_EQ(Params<Exact>::from_ab(r(9, 4), r(1, 16)).root_a(), r(3, 2));
}

TEST(Params, FromFrequencies) {
  const auto p = params_from_frequencies(std::sqrt(3.0), 1.0);
  EXPECT_NEAR(p.lambda().real(), std::sqrt(2.0), 1e-14);
  EXPECT_NEAR(p.g().real(), 1.0, 1e-14);
  EXPECT_NEAR(p.a().real(), std::sqrt(2.0) / 2, 1e-14);
  EXPECT_NEAR(p.b().real(), 1 / (4 * std::sqrt(2.0)), 1e-14);
  EXPECT_THROW(params_from_frequencies(1.0, 1.0), UnsupportedBranch);
  EXPECT_THROW(params_from_frequencies(1.0, 2.0), UnsupportedBranch);
}

TEST(Basis, Pochhammer) {
  EXPECT_EQ(pochhammer(r(7, 3), 0), Exact(1));
  EXPECT_EQ(pochhammer(Exact(3), 2), Exact(12));
  EXPECT_EQ(pochhammer(Exact(-2), 5), Exact(0));
}

TEST(Basis, AlphaCoefficients) {
  EXPECT_EQ(alpha_coeffs<Exact>(0), std::vector<Exact>{Exact(1)});
  EXPECT_EQ(alpha_coeffs<Exact>(1), (std::vector<Exact>{Exact(-2), Exact(4)}));
  EXPECT_EQ(alpha_coeffs<Exact>(2), (std::vector<Exact>{Exact(4), Exact(-16), Exact(16)}));
  // The interior formula continues to the upper endpoint.
  for (int k = 1; k <= 10; ++k) {
    const auto alpha = alpha_coeffs<Exact>(k);
    Exact top = power(Exact(-2), k) * pochhammer(Exact(1), k) * alpha[0];
    for (int i = 1; i <= k; ++i) top = top / Exact(i);
    EXPECT_EQ(alpha[k], top);
  }
}

TEST(Basis, BlockIndexBounds) {
  EXPECT_THROW(BlockIndex(2, 5), std::out_of_range);
  EXPECT_THROW(BlockIndex(2, -1), std::out_of_range);
  EXPECT_THROW(BlockIndex::from_doubled(2, 3), std::out_of_range);
  const BlockIndex idx = BlockIndex::from_doubled(3, -1);
  EXPECT_EQ(idx.n(), 3);
  EXPECT_EQ(idx.m(), 1);
  EXPECT_THROW(build_psi(testing::default_exact(), 2, 5), std::out_of_range);
}

TEST(Basis, EigenfunctionsAndAssociatedFormulaAgree) {
  const auto p = testing::default_exact();
  EXPECT_EQ(build_psi(p, 0, 0).poly, Poly::constant(Exact(1)));
  for (int n = 0; n <= 10; ++n) {
    const Exact c = power(Exact(4) * p.root_ab(), n);
    EXPECT_EQ(build_psi(p, n, 0).poly, Poly::monomial(0, n, c)) << n;
    EXPECT_EQ(associated_formula(p, n, 0), build_psi(p, n, 0)) << n;
  }
}

TEST(Basis, FirstAssociatedFunction) {
  const auto p = Params<Exact>::from_roots(r(3, 2), r(2, 3));
  // c_1 = c_{1,0}/(8ab) = 1/(2 sqrt(ab)) in units of kappa.
  const Exact c1 = Exact(1) / (Exact(2) * p.root_ab());
  EXPECT_EQ(build_psi(p, 1, 1).poly, Poly::monomial(1, 0, c1 * p.a()) + Poly::monomial(0, 1, c1 * p.b()));
}

TEST(Basis, RenormalizedFunctions) {
  const auto p = testing::default_exact();
  EXPECT_EQ(build_phi(p, 0, 0).fn, build_psi(p, 0, 0));
  EXPECT_TRUE(build_phi(p, 2, 1).materialized());
  EXPECT_EQ(build_phi(p, 2, 1).fn, build_psi(p, 2, 1));
  const ScaledFn<Exact> phi31 = build_phi(p, 3, 1);
  EXPECT_EQ(phi31.fn, build_psi(p, 3, 1));
  EXPECT_EQ(phi31.scale_sq, r(1, 2));
  EXPECT_FALSE(phi31.materialized());
  EXPECT_EQ(build_phi(p, 3, 3).scale_sq, Exact(6));
  const auto fp = testing::default_float();
  const ScaledFn<Float> fphi = build_phi(fp, 3, 1);
  EXPECT_TRUE(approx_equal(fphi.fn.poly, Poly2<Float>(Float(std::sqrt(0.5)) * build_psi(fp, 3, 1).poly), 1e-14));
}

TEST(Basis, FloatMatchesExact) {
  const auto p = testing::default_exact();
  const auto fp = testing::default_float();
  for (int n = 0; n <= 8; ++n) {
    for (int m = 0; m <= n; ++m) {
      EXPECT_TRUE(approx_equal(to_float(build_psi(p, n, m).poly), build_psi(fp, n, m).poly, 1e-12));
    }
  }
}

TEST(Operators, CatalogDefinitions) {
  const auto p = testing::default_exact();
  const Op dz = Op::d_z(), dzb = Op::d_zbar(), z = Op::z(), zb = Op::zbar();
  EXPECT_EQ(make_operator(p, Generator::A_minus), dz + zb);
  EXPECT_EQ(make_operator(p, Generator::A_plus), dz - zb);
  EXPECT_EQ(make_operator(p, "B-"), dzb + z + r(1, 2) * zb);
  EXPECT_EQ(make_operator(p, Generator::R), dz * dz - zb * zb);
  EXPECT_EQ(make_operator(p, Generator::U),
            r(-1, 2) * make_operator(p, Generator::H) + Op::scalar(Exact(2) * p.a()));
  EXPECT_EQ(make_operator(p, Generator::H),
            Exact(-4) * dz * dzb + Exact(4) * p.a() * p.a() * z * zb + Exact(8) * p.a() * p.b() * zb * zb);
  EXPECT_THROW(make_operator(p, "Q"), std::invalid_argument);
  for (Generator g : kAllGenerators) EXPECT_EQ(parse_generator(name(g)), g);
}

TEST(Operators, ExplicitForms) {
  const auto p = Params<Exact>::from_roots(r(3, 2), r(1, 3));
  const Exact a = p.a(), b = p.b();
  const Op dz = Op::d_z(), dzb = Op::d_zbar(), z = Op::z(), zb = Op::zbar();
  EXPECT_EQ(explicit_form(p, Generator::J_minus), (Exact(-4) * b / a) * (dz * dz - a * a * zb * zb));
  EXPECT_EQ(explicit_form(p, "K"),
            (Exact(1) / (a * a)) * (b * dz * dz - a * dz * dzb + a * a * zb * (a * z + b * zb)));
  EXPECT_EQ(explicit_form(p, "a2+"), (Exact(-2) * p.root_b_over_a()) * (dz - a * zb));
  EXPECT_THROW(explicit_form(p, Generator::H), std::invalid_argument);
}

TEST(Operators, ExplicitFormsAgreeWithCatalogAtRandomPoints) {
  Gen gen(23);
  for (int trial = 0; trial < 5; ++trial) {
    const auto p = Params<Exact>::from_roots(gen.positive_rational(), gen.positive_rational());
    for (Generator g : kExplicitFormGenerators) EXPECT_EQ(make_operator(p, g), explicit_form(p, g)) << name(g);
  }
}

TEST(Apply, LadderExamples) {
  const auto p = testing::default_exact();
  const OperatorCatalog<Exact> ops(p);
  for (int n = 0; n <= 6; ++n) {
    EXPECT_TRUE(apply(p, ops[Generator::A_minus], build_psi(p, n, 0)).poly.is_zero());
    EXPECT_EQ(apply(p, ops[Generator::A_plus], build_psi(p, n, 0)),
              (r(-1, 2) * p.root_a_over_b()) * build_psi(p, n + 1, 0));
  }
  EXPECT_EQ(apply(p, ops[Generator::H], build_psi(p, 1, 1)) - p.energy(1) * build_psi(p, 1, 1),
            build_psi(p, 1, 0));
}

TEST(Apply, JordanChainAtRandomPoints) {
  Gen gen(29);
  for (int trial = 0; trial < 3; ++trial) {
    const auto p = Params<Exact>::from_roots(gen.positive_rational(), gen.positive_rational());
    const Op h = make_operator(p, Generator::H);
    for (int n = 0; n <= 6; ++n) {
      for (int m = 0; m <= n; ++m) {
        ReducedFn<Exact> expected = p.energy(n) * build_psi(p, n, m);
        if (m > 0) expected += build_psi(p, n, m - 1);
        EXPECT_EQ(apply(p, h, build_psi(p, n, m)), expected) << n << "," << m;
      }
    }
  }
}

TEST(Apply, AgreesWithOperatorConjugation) {
  Gen gen(31);
  const auto p = Params<Exact>::from_roots(r(5, 4), r(2, 3));
  for (int trial = 0; trial < 50; ++trial) {
    const Op a = gen.op(2, 4);
    const ReducedFn<Exact> f{gen.poly(4, 5)};
    EXPECT_EQ(apply(p, a, f).poly, act(conjugate_by_envelope(p, a), f.poly));
  }
}

TEST(Apply, IsLinear) {
  Gen gen(37);
  const auto p = testing::default_exact();
  for (int trial = 0; trial < 30; ++trial) {
    const Op a = gen.op(2, 3), b = gen.op(2, 3);
    const ReducedFn<Exact> f{gen.poly(3, 4)}, g{gen.poly(3, 4)};
    const Exact c = gen.rational();
    EXPECT_EQ(apply(p, a, f + c * g), apply(p, a, f) + c * apply(p, a, g));
    EXPECT_EQ(apply(p, a + b, f), apply(p, a, f) + apply(p, b, f));
  }
}

// Mixed partial derivative of an entire function of (z, zbar) by the
// trapezoid rule on Cauchy circles.
template <class Fn>
Float cauchy_derivative(Fn&& f, Float z0, Float zb0, int k, int l) {
  constexpr int kPoints = 48;
  constexpr double kRadius = 0.5;
  double fact = 1.0;
  for (int i = 2; i <= k; ++i) fact *= i;
  for (int i = 2; i <= l; ++i) fact *= i;
  Float sum{};
  for (int s = 0; s < kPoints; ++s) {
    const double ts = 2 * std::numbers::pi * s / kPoints;
    for (int t = 0; t < kPoints; ++t) {
      const double tt = 2 * std::numbers::pi * t / kPoints;
      const Float dz = k == 0 ? Float{} : std::polar(kRadius, ts);
      const Float dzb = l == 0 ? Float{} : std::polar(kRadius, tt);
      Float w = f(z0 + dz, zb0 + dzb);
      if (k > 0) w *= std::polar(1.0, -k * ts);
      if (l > 0) w *= std::polar(1.0, -l * tt);
      sum += w;
    }
  }
  return fact * sum / (kPoints * kPoints * std::pow(kRadius, k + l));
}

TEST(Apply, MatchesNumericalDifferentiationOfFullFunction) {
  const auto fp = testing::default_float();
  const double a = fp.a().real(), b = fp.b().real();
  const OperatorCatalog<Float> ops(fp);
  const Float z0{0.3, -0.2}, zb0{0.1, 0.4};
  auto envelope = [&](Float z, Float zb) { return std::exp(-a * z * zb - b * zb * zb); };
  for (Generator g : {Generator::H, Generator::S, Generator::B_plus, Generator::D_minus_22, Generator::K}) {
    for (auto [n, m] : {std::pair{2, 1}, std::pair{3, 0}, std::pair{4, 3}}) {
      const ReducedFn<Float> psi = build_psi(fp, n, m);
      auto full = [&](Float z, Float zb) { return psi.poly.evaluate(z, zb) * envelope(z, zb); };
      Float numeric{};
      for (const auto& [word, c] : ops[g].terms()) {
        numeric += c * std::pow(z0, word.z) * std::pow(zb0, word.zbar) *
                   cauchy_derivative(full, z0, zb0, word.dz, word.dzbar);
      }
      const Float symbolic = apply(fp, ops[g], psi).poly.evaluate(z0, zb0) * envelope(z0, zb0);
      EXPECT_NEAR(std::abs(numeric - symbolic), 0.0, 1e-9 * std::max(1.0, std::abs(symbolic)))
          << name(g) << " on " << n << "," << m;
    }
  }
}

}  // namespace
}  // namespace cxosc
