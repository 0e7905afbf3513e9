#include "doctest.h"
#include "lni/bridge.hpp"
#include "test_systems.hpp"

using namespace lni;
using namespace lni::testing;

TEST_CASE("zero-route transform on the nonproper 2x2 reference") {
  const auto out = to_lpr_via_zero(lni_nonproper_2x2());
  CHECK(tm_equal(out.f, lpr_bridge_image_2x2()));
  CHECK(out.anchor == MatQ(MatQ::Identity(2, 2)));
  CHECK(out.anchor_symmetric);
}

TEST_CASE("infinity-route transform on the proper 2x2 reference") {
  const auto out = to_lpr_via_infinity(lni_proper_2x2());
  CHECK(tm_equal(out.f, lpr_bridge_image_2x2()));
  MatQ expected(2, 2);
  expected << Rational(-1), Rational(1), Rational(1), Rational(-1);
  CHECK(out.anchor == expected);
  CHECK(out.anchor_symmetric);
}

TEST_CASE("transform edge cases") {
  SUBCASE("constant symmetric matrix maps to zero on both routes") {
    const MatQ d = (MatQ(2, 2) << Rational(1), Rational(2), Rational(2), Rational(-1)).finished();
    CHECK(tm_is_zero(to_lpr_via_zero(tm_constant(d)).f));
    CHECK(tm_is_zero(to_lpr_via_infinity(tm_constant(d)).f));
  }
  SUBCASE("pure skew s-term maps to its negation through the zero route") {
    // G = s * A1 with A1 skew: F = -A1, and F + F^T(-s) = -(A1 + A1^T) = 0.
    MatQ a1(2, 2);
    a1 << Rational(0), Rational(-1), Rational(1), Rational(0);
    const RationalFunction s = RationalFunction::variable();
    const TransferMatrix g = tm_scaled(s, a1);
    const auto out = to_lpr_via_zero(g);
    CHECK(tm_equal(out.f, tm_constant(MatQ(-a1))));
    CHECK(tm_is_zero(TransferMatrix(out.f + para_conjugate(out.f))));
  }
  SUBCASE("skew 1/s coefficient through the infinity route lands at a skew constant") {
    // G = (1/s) C1 + D: F(0) + F*(0) = C1 + C1^T = 0.
    MatQ c1(2, 2);
    c1 << Rational(0), Rational(2), Rational(-2), Rational(0);
    MatQ d = MatQ::Identity(2, 2);
    TransferMatrix g = tm_scaled(RationalFunction(Poly::one(), Poly::variable()), c1);
    g += tm_constant(d);
    const auto out = to_lpr_via_infinity(g);
    const ComplexMatQ f0 = evaluate(out.f, ComplexRational());
    CHECK(is_zero(MatQ(f0.re + f0.re.transpose())));
  }
  SUBCASE("hypothesis violations throw") {
    CHECK_THROWS_AS(to_lpr_via_zero(scalar_tm(rf({1}, {0, 1}))), std::invalid_argument);
    CHECK_THROWS_AS(to_lpr_via_infinity(scalar_tm(rf({0, 1}, {1}))), std::invalid_argument);
  }
}

TEST_CASE("bridge classification reproduces the reference verdicts") {
  SUBCASE("nonproper 2x2 via the zero route") {
    const auto report = classify_lni_via_bridge(lni_nonproper_2x2(), BridgeRoute::kZero);
    CHECK(report.verdict == Verdict::kLosslessNi);
    CHECK(report.lpr_report.verdict == Verdict::kLosslessPr);
  }
  SUBCASE("proper 2x2 via the infinity route") {
    const auto report = classify_lni_via_bridge(lni_proper_2x2(), BridgeRoute::kInfinity);
    CHECK(report.verdict == Verdict::kLosslessNi);
  }
  SUBCASE("1/s via the infinity route: F = 1 is not lossless") {
    const auto report = classify_lni_via_bridge(scalar_tm(rf({1}, {0, 1})), BridgeRoute::kInfinity);
    CHECK(report.verdict != Verdict::kLosslessNi);
    CHECK_FALSE(report.lpr_report.find("pr.para-skew")->pass);
  }
}

TEST_CASE("route applicability and the dual-route consistency check") {
  CHECK(bridge_route_applies(lni_nonproper_2x2(), BridgeRoute::kZero));
  CHECK_FALSE(bridge_route_applies(lni_nonproper_2x2(), BridgeRoute::kInfinity));
  CHECK_FALSE(bridge_route_applies(lni_proper_2x2(), BridgeRoute::kZero));
  CHECK(bridge_route_applies(lni_proper_2x2(), BridgeRoute::kInfinity));

  // Both routes apply to a strictly proper system with no zero pole.
  const TransferMatrix g = scalar_tm(rf({1}, {1, 0, 1}));
  const auto reports = classify_lni_via_all_routes(g);
  REQUIRE(reports.size() == 2);
  CHECK(reports[0].verdict == Verdict::kLosslessNi);
  CHECK(reports[1].verdict == Verdict::kLosslessNi);
}

TEST_CASE("bridge and direct classification agree on generated systems and mutants") {
  int agreements = 0;
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    GenerateSpec spec;
    spec.m = 1 + static_cast<Eigen::Index>(seed % 2);
    spec.num_modes = static_cast<int>(seed % 3);
    spec.zero_pole_order = static_cast<int>(seed % 3);
    spec.infinity_pole_order = static_cast<int>((seed / 2) % 3);
    spec.seed = seed * 31;
    const TransferMatrix g = generate_lni(spec);
    const bool direct = is_lossless_ni(g).passed();
    for (const auto& report : classify_lni_via_all_routes(g)) {
      CHECK((report.verdict == Verdict::kLosslessNi) == direct);
      ++agreements;
    }
    // Mutate: add a real pole to break condition 1; both views must reject.
    TransferMatrix broken = g;
    broken(0, 0) += rf({1}, {1, 1});
    const bool direct_broken = is_lossless_ni(broken).passed();
    CHECK_FALSE(direct_broken);
    for (const auto& report : classify_lni_via_all_routes(broken)) {
      CHECK((report.verdict == Verdict::kLosslessNi) == direct_broken);
      ++agreements;
    }
  }
  CHECK(agreements > 0);
}

TEST_CASE("exact cancellation property of the zero route") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    GenerateSpec spec;
    spec.m = 2;
    spec.num_modes = 1 + static_cast<int>(seed % 2);
    spec.zero_pole_order = 0;
    spec.infinity_pole_order = static_cast<int>(seed % 3);
    spec.seed = seed;
    const TransferMatrix g = generate_lni(spec);
    const auto out = to_lpr_via_zero(g);  // throws internally if cancellation fails
    // F must have no pole at zero either.
    CHECK(zero_pole_order(out.f) == 0);
  }
}
