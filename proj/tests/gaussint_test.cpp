#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <thread>

#include "cxosc/gaussint.hpp"
#include "cxosc/operators.hpp"
#include "cxosc/quadrature.hpp"
#include "support.hpp"

namespace cxosc {
namespace {

using testing::Gen;

Exact r(long n, long d = 1) { return Exact::ratio(n, d); }

// Expanding exp(-2b zbar^2) leaves angular integrals of z^p zbar^(q+2k)
// exp(-2a z zbar), nonzero only for p = q + 2k, each equal to
// pi p!/(2a)^(p+1). In units of pi/(2a):
//   I(p, q) = (-2b)^k / k! * p! / (2a)^p.
Exact series_moment(const Params<Exact>& p, int pd, int qd) {
  if (pd < qd || (pd - qd) % 2 != 0) return Exact(0);
  const int k = (pd - qd) / 2;
  Exact value = power(Exact(-2) * p.b(), k) / power(Exact(2) * p.a(), pd);
  for (int i = 2; i <= pd; ++i) value *= Exact(i);
  for (int i = 2; i <= k; ++i) value = value / Exact(i);
  return value;
}

TEST(Moments, Examples) {
  const auto p = testing::default_exact();
  EXPECT_EQ(moment(p, 0, 0).multiplier, Exact(1));
  EXPECT_EQ(moment(p, 0, 1).multiplier, Exact(0));
  EXPECT_EQ(moment(p, 2, 0).multiplier, -p.b() / (p.a() * p.a()));
  const MomentTable<Exact> table(p);
  EXPECT_EQ(table.multiplier(-1, 3), Exact(0));
  EXPECT_EQ(table.multiplier(2, -1), Exact(0));
}

TEST(Moments, MatchSeriesClosedForm) {
  Gen gen(41);
  for (int trial = 0; trial < 3; ++trial) {
    const auto p = trial == 0 ? testing::default_exact()
                              : Params<Exact>::from_roots(gen.positive_rational(), gen.positive_rational());
    const MomentTable<Exact> table(p);
    for (int pd = 0; pd <= 16; ++pd) {
      for (int qd = 0; qd <= 16; ++qd) EXPECT_EQ(table.multiplier(pd, qd), series_moment(p, pd, qd)) << pd << "," << qd;
    }
  }
}

TEST(Moments, SatisfyIntegrationByParts) {
  const auto p = Params<Exact>::from_roots(r(4, 3), r(3, 5));
  const MomentTable<Exact> t(p);
  const Exact two_a = Exact(2) * p.a(), four_b = Exact(4) * p.b();
  for (int pd = 0; pd <= 10; ++pd) {
    for (int qd = 0; qd <= 10; ++qd) {
      EXPECT_EQ(Exact(pd) * t.multiplier(pd - 1, qd), two_a * t.multiplier(pd, qd + 1));
      EXPECT_EQ(Exact(qd) * t.multiplier(pd, qd - 1), two_a * t.multiplier(pd + 1, qd) + four_b * t.multiplier(pd, qd + 1));
    }
  }
}

TEST(Moments, SharedTableIsThreadSafe) {
  const auto p = testing::default_exact();
  const MomentTable<Exact> shared(p);
  std::vector<std::thread> workers;
  std::vector<std::vector<Exact>> results(8);
  for (int w = 0; w < 8; ++w) {
    workers.emplace_back([&, w] {
      for (int k = 0; k < 200; ++k) {
        const int pd = (k * 7 + w) % 18, qd = (k * 5 + 3 * w) % 18;
        results[w].push_back(shared.multiplier(pd, qd));
      }
    });
  }
  for (auto& t : workers) t.join();
  for (int w = 0; w < 8; ++w) {
    for (int k = 0; k < 200; ++k) {
      const int pd = (k * 7 + w) % 18, qd = (k * 5 + 3 * w) % 18;
      EXPECT_EQ(results[w][k], series_moment(p, pd, qd));
    }
  }
}

TEST(InnerProduct, Examples) {
  const auto p = testing::default_exact();
  EXPECT_EQ(inner_product(p, build_psi(p, 0, 0), build_psi(p, 0, 0)), Exact(1));
  EXPECT_EQ(inner_product(p, build_psi(p, 1, 0), build_psi(p, 1, 0)), Exact(0));
  EXPECT_EQ(inner_product(p, build_psi(p, 1, 0), build_psi(p, 1, 1)), Exact(1));
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(inner_product(p, build_psi(p, n, 0), build_psi(p, n, 0)), Exact(0));
}

TEST(InnerProduct, BilinearAndSymmetric) {
  Gen gen(43);
  const auto p = Params<Exact>::from_roots(r(2, 3), r(1, 2));
  const MomentTable<Exact> table(p);
  for (int trial = 0; trial < 50; ++trial) {
    const ReducedFn<Exact> f{gen.poly(4, 5)}, g{gen.poly(4, 5)}, h{gen.poly(4, 5)};
    const Exact c = gen.rational();
    EXPECT_EQ(inner_product(table, f, g), inner_product(table, g, f));
    EXPECT_EQ(inner_product(table, f + c * g, h), inner_product(table, f, h) + c * inner_product(table, g, h));
  }
}

TEST(GramBlock, AntiDiagonal) {
  const auto p = testing::default_exact();
  EXPECT_EQ(gram_block(p, 0), Matrix<Exact>::identity(1));
  Matrix<Exact> two(2, 2);
  two(0, 1) = two(1, 0) = Exact(1);
  EXPECT_EQ(gram_block(p, 1), two);
  for (int n = 0; n <= 8; ++n) EXPECT_EQ(gram_block(p, n), anti_identity<Exact>(n)) << n;
}

TEST(HBlock, JordanForm) {
  const auto p = Params<Exact>::from_roots(r(3, 2), r(1, 2));
  Matrix<Exact> one(1, 1);
  one(0, 0) = Exact(4) * p.a();
  EXPECT_EQ(h_block(p, 0), one);
  Matrix<Exact> two(2, 2);
  two(0, 0) = two(1, 1) = Exact(8) * p.a();
  two(0, 1) = Exact(1);
  EXPECT_EQ(h_block(p, 1), two);
  Matrix<Exact> three(3, 3);
  three(0, 0) = three(1, 1) = three(2, 2) = Exact(12) * p.a();
  three(0, 1) = three(1, 2) = Exact(1);
  EXPECT_EQ(h_block(p, 2), three);
  for (int n = 0; n <= 8; ++n) EXPECT_EQ(h_block(p, n), jordan_block(p, n)) << n;
}

TEST(HBlock, ResolutionOfIdentityReproducesPolynomials) {
  Gen gen(47);
  const auto p = testing::default_exact();
  const MomentTable<Exact> table(p);
  for (int trial = 0; trial < 10; ++trial) {
    const ReducedFn<Exact> f{gen.poly(3, 6)};
    ReducedFn<Exact> rebuilt;
    for (int n = 0; n <= 6; ++n) {
      for (int m = 0; m <= n; ++m) rebuilt += inner_product(table, build_psi(p, n, n - m), f) * build_psi(p, n, m);
    }
    EXPECT_EQ(rebuilt, f);
  }
}

TEST(Quadrature, Examples) {
  const auto fp = testing::default_float();
  const Float ground = quadrature_oracle(fp, build_psi(fp, 0, 0), build_psi(fp, 0, 0));
  EXPECT_NEAR(std::abs(ground - Float(1.0)), 0.0, 1e-10);
  const ReducedFn<Float> zzb{Poly2<Float>::monomial(1, 1)}, one{Poly2<Float>::constant(Float(1.0))};
  const Float exact_11 = to_float(moment(testing::default_exact(), 1, 1).multiplier);
  EXPECT_NEAR(std::abs(quadrature_oracle(fp, zzb, one) - exact_11), 0.0, 1e-10);
  EXPECT_NEAR(std::abs(quadrature_oracle(fp, build_psi(fp, 2, 0), build_psi(fp, 3, 1))), 0.0, 1e-10);
  EXPECT_EQ(default_quadrature_order(4), 32);
  EXPECT_EQ(default_quadrature_order(40), 48);
}

TEST(Quadrature, MomentsAgreeToRelativeTolerance) {
  const auto p = testing::default_exact();
  const auto fp = testing::default_float();
  const double unit = std::numbers::pi / (2 * fp.a().real());
  for (int total = 0; total <= 12; ++total) {
    for (int pd = 0; pd <= total; ++pd) {
      const Poly2<Float> mono = Poly2<Float>::monomial(pd, total - pd);
      const Float exact = to_float(moment(p, pd, total - pd).multiplier) * unit;
      const double scale = std::max(std::abs(exact), gaussian_abs_integral(fp, mono));
      EXPECT_LE(std::abs(gaussian_integral(fp, mono) - exact) / scale, 1e-8) << pd << "," << total - pd;
    }
  }
}

TEST(Quadrature, UnavailableWhenBIsNotSmaller) {
  const auto fp = Params<Float>::from_roots(Float(0.5), Float(1.0));
  EXPECT_THROW(gaussian_integral(fp, Poly2<Float>::constant(Float(1.0))), OracleUnavailable);
  const auto equal = Params<Float>::from_roots(Float(1.0), Float(1.0));
  EXPECT_THROW(quadrature_oracle(equal, ReducedFn<Float>{}, ReducedFn<Float>{}), OracleUnavailable);
}

}  // namespace
}  // namespace cxosc
