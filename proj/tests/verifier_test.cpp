#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>

#include "cxosc/apply.hpp"
#include "cxosc/basis.hpp"
#include "cxosc/verifier.hpp"
#include "support.hpp"

namespace cxosc {
namespace {

using testing::Gen;
using Op = DiffOp<Exact>;

const std::string kData = CXOSC_TEST_DATA_DIR;

Exact r(long n, long d = 1) { return Exact::ratio(n, d); }

std::vector<RelationSpec> catalog() { return load_catalog(kData + "/relations.rel"); }

std::vector<RelationSpec> parse(const std::string& text) {
  std::istringstream in(text);
  return parse_catalog(in, "inline");
}

const Report& find(const std::vector<Report>& reports, std::string_view id) {
  auto it = std::find_if(reports.begin(), reports.end(), [&](const Report& r) { return r.id == id; });
  if (it == reports.end()) throw std::runtime_error("missing report " + std::string(id));
  return *it;
}

void expect_all_pass(const std::vector<Report>& reports) {
  for (const Report& r : reports) EXPECT_EQ(r.status, Status::pass) << r.id << " residual=" << r.residual << " " << r.detail;
}

TEST(Catalog, ParsesEntries) {
  const auto specs = parse("cxosc-relations 1\n# comment\n\nx commutator tag (comm dz z) 1\ny identity tag U (+ (* -1/2 H) (* 2 a))\n");
  ASSERT_EQ(specs.size(), 2u);
  EXPECT_EQ(specs[0].id, "x");
  EXPECT_EQ(specs[0].kind, RelationKind::commutator);
  EXPECT_EQ(specs[1].anchor, "tag");
  EXPECT_EQ(to_string(specs[1].rhs), "(+ (* -1/2 H) (* 2 a))");
}

TEST(Catalog, RejectsMalformedInput) {
  EXPECT_THROW(parse("x commutator t (comm dz z) 1\n"), CatalogError);
  EXPECT_THROW(parse(""), CatalogError);
  EXPECT_THROW(parse("cxosc-relations 1\nx commutator t (comm dz z) 1\nx commutator t (comm dz z) 1\n"), CatalogError);
  EXPECT_THROW(parse("cxosc-relations 1\nx commutator t (acomm dz z) 1\n"), CatalogError);
  EXPECT_THROW(parse("cxosc-relations 1\nx anticommutator t (comm dz z) 1\n"), CatalogError);
  EXPECT_THROW(parse("cxosc-relations 1\nx identity t Q 1\n"), CatalogError);
  EXPECT_THROW(parse("cxosc-relations 1\nx identity t (* H\n"), CatalogError);
  EXPECT_THROW(parse("cxosc-relations 1\nx identity t H H H\n"), CatalogError);
  EXPECT_THROW(parse("cxosc-relations 1\nx sometimes t H H\n"), CatalogError);
  try {
    parse("cxosc-relations 1\n\nx identity t Q 1\n");
    FAIL();
  } catch (const CatalogError& e) {
    EXPECT_NE(std::string(e.what()).find("inline:3:"), std::string::npos) << e.what();
  }
}

TEST(Catalog, ExpressionsRoundTrip) {
  for (const RelationSpec& spec : catalog()) {
    EXPECT_EQ(to_string(parse_expression(to_string(spec.lhs))), to_string(spec.lhs));
    EXPECT_EQ(to_string(parse_expression(to_string(spec.rhs))), to_string(spec.rhs));
  }
}

TEST(Catalog, EvaluatesAtoms) {
  const auto p = testing::default_exact();
  const OperatorCatalog<Exact> ops(p);
  EXPECT_EQ(evaluate(parse_expression("(comm dz z)"), ops), Op::identity());
  EXPECT_EQ(evaluate(parse_expression("(* i sqrt_b zb)"), ops), Op::term({0, 1, 0, 0}, r(1, 2) * Exact::imaginary_unit()));
  EXPECT_EQ(evaluate(parse_expression("(/ a b)"), ops), Op::scalar(Exact(4)));
  EXPECT_EQ(evaluate(parse_expression("(- A+)"), ops), -ops[Generator::A_plus]);
  EXPECT_EQ(evaluate(parse_expression("(/ H 2)"), ops), r(1, 2) * ops[Generator::H]);
  EXPECT_THROW(evaluate(parse_expression("(/ 2 H)"), ops), CatalogError);
  EXPECT_THROW(evaluate(parse_expression("(/ H 0)"), ops), CatalogError);
}

TEST(Structure, ShippedCatalogPassesAtDefaultPoint) {
  const auto specs = catalog();
  EXPECT_GE(specs.size(), 45u);
  const auto reports = check_structure(testing::default_exact(), specs);
  ASSERT_EQ(reports.size(), specs.size());
  expect_all_pass(reports);
  EXPECT_EQ(find(reports, "block.H_R").residual, "0");
  EXPECT_EQ(find(reports, "ladder.B-_B+").status, Status::pass);
}

TEST(Structure, ShippedCatalogPassesAtRandomAdmissiblePoints) {
  Gen gen(53);
  const auto specs = catalog();
  for (int trial = 0; trial < 2; ++trial) {
    const auto p = Params<Exact>::from_roots(gen.positive_rational(), gen.positive_rational());
    SCOPED_TRACE(p.describe());
    expect_all_pass(check_structure(p, specs));
    expect_all_pass(check_explicit_forms(p));
  }
}

TEST(Structure, FloatModePassesWithinTolerance) {
  expect_all_pass(check_structure(testing::default_float(), catalog()));
}

TEST(Structure, NegativeControlsFail) {
  const auto specs = load_catalog(kData + "/negative_controls.rel");
  ASSERT_EQ(specs.size(), 5u);
  const auto reports = check_structure(testing::default_exact(), specs);
  for (const Report& rep : reports) {
    EXPECT_EQ(rep.status, Status::fail) << rep.id;
    EXPECT_NE(rep.residual, "0") << rep.id;
  }
  EXPECT_EQ(find(reports, "corrupt.A-_A+").residual, "1");
}

TEST(Pseudo, HamiltonianAndControls) {
  const auto p = testing::default_exact();
  EXPECT_EQ(check_pseudo_hermiticity(p).status, Status::pass);
  const Op h = make_operator(p, Generator::H);
  const Op corrupted = h + Op::term({1, 1, 0, 0}, Exact::imaginary_unit());
  const Report bad = check_pseudo_hermiticity(corrupted, "corrupted");
  EXPECT_EQ(bad.status, Status::fail);
  EXPECT_EQ(bad.residual, "2");
  EXPECT_EQ(check_pseudo_hermiticity(Op::term({0, 0, 1, 1}, Exact(-4)), "free").status, Status::pass);
  EXPECT_EQ(check_pseudo_hermiticity(h + Op::z(), "real").status, Status::pass);
}

TEST(Actions, AllFamiliesPass) {
  const auto reports = check_actions(testing::default_exact());
  EXPECT_EQ(reports.size(), 23u);
  expect_all_pass(reports);
  expect_all_pass(check_actions(testing::default_float()));
}

TEST(Actions, PassAtAnotherPoint) {
  VerifyOptions opts;
  opts.n_max = 6;
  expect_all_pass(check_actions(Params<Exact>::from_roots(r(2, 3), r(5, 4)), opts));
}

TEST(Actions, LoweringExample) {
  const auto p = testing::default_exact();
  const ReducedFn<Exact> lhs = apply(p, make_operator(p, Generator::B_minus), build_psi(p, 3, 2));
  const ReducedFn<Exact> rhs = (Exact(4) * p.root_ab()) * build_psi(p, 2, 2) + (r(1, 2) * p.root_b_over_a()) * build_psi(p, 2, 1);
  EXPECT_EQ(lhs, rhs);
  for (int n = 0; n <= 5; ++n) {
    EXPECT_TRUE(apply(p, make_operator(p, Generator::a2_minus), build_psi(p, n, n)).poly.is_zero());
    if (n >= 1) EXPECT_TRUE(apply(p, make_operator(p, Generator::D_minus_11), build_psi(p, n, 1)).poly.is_zero());
  }
}

TEST(Irrep, ExactAndFloat) {
  const auto reports = check_irrep(testing::default_exact());
  EXPECT_EQ(reports.size(), 14u);
  expect_all_pass(reports);
  expect_all_pass(check_irrep(testing::default_float()));
  expect_all_pass(check_irrep(Params<Exact>::from_roots(r(3, 4), r(1, 3))));
}

TEST(Irrep, Examples) {
  const auto p = testing::default_exact();
  const OperatorCatalog<Exact> ops(p);
  // j = 1, mu = -1 is (n, m) = (2, 0).
  const ReducedFn<Exact> phi = build_phi(p, 2, 0).fn;
  EXPECT_EQ(apply(p, ops[Generator::J0], phi), Exact(-1) * phi);
  EXPECT_TRUE(apply(p, ops[Generator::J_plus], build_phi(p, 2, 2).fn).poly.is_zero());
  // j = 1, mu = 0 is (2, 1); D+12 lands on j = 2, mu = 0, i.e. (4, 2), both with unit scale.
  ASSERT_TRUE(build_phi(p, 2, 1).materialized());
  ASSERT_TRUE(build_phi(p, 4, 2).materialized());
  EXPECT_EQ(apply(p, ops[Generator::D_plus_12], build_phi(p, 2, 1).fn), Exact(2) * build_phi(p, 4, 2).fn);
}

TEST(Integrals, PassAndSkipOracleWhenUnavailable) {
  const auto reports = check_integrals(testing::default_exact());
  expect_all_pass(reports);
  EXPECT_EQ(find(reports, "quadrature.moments").status, Status::pass);
  EXPECT_EQ(find(reports, "quadrature.basis_pairs").status, Status::pass);
  VerifyOptions opts;
  opts.n_max = 4;
  const auto flipped = check_integrals(Params<Exact>::from_roots(r(1, 2), Exact(1)), opts);
  EXPECT_EQ(find(flipped, "quadrature.moments").status, Status::skipped);
  EXPECT_EQ(find(flipped, "biorthogonality.gram_blocks").status, Status::pass);
  expect_all_pass(check_integrals(testing::default_float()));
}

TEST(Reports, DeterministicAcrossRuns) {
  const auto p = testing::default_exact();
  const std::set<Suite> all(std::begin(kAllSuites), std::end(kAllSuites));
  VerifyOptions opts;
  opts.n_max = 4;
  const auto first = run_suites(p, catalog(), all, opts);
  const auto second = run_suites(p, catalog(), all, opts);
  ASSERT_EQ(first.size(), second.size());
  for (std::size_t i = 0; i < first.size(); ++i) EXPECT_TRUE(same_outcome(first[i], second[i])) << first[i].id;
}

TEST(Reports, EnumsRoundTrip) {
  for (Suite s : kAllSuites) EXPECT_EQ(parse_suite(to_string(s)), s);
  for (Status s : {Status::pass, Status::fail, Status::skipped}) EXPECT_EQ(parse_status(to_string(s)), s);
  EXPECT_FALSE(parse_suite("everything"));
}

}  // namespace
}  // namespace cxosc
