#include "doctest.h"
#include "lni/spectral.hpp"
#include "lni/state_space.hpp"
#include "test_systems.hpp"

using namespace lni;
using namespace lni::testing;

namespace {

// Minimal realization of (1 - 2s^4)/(s^2 (s^2+1)) used throughout the
// certificate tests: n = 4, singular A, CB = 0.
StateSpace siso_reference_ss() {
  StateSpace ss;
  ss.A = MatQ::Zero(4, 4);
  ss.A(0, 1) = -1;
  ss.A(1, 0) = 1;
  ss.A(2, 1) = 1;
  ss.A(3, 2) = 1;
  ss.B = MatQ::Zero(4, 1);
  ss.B(0, 0) = 1;
  ss.C = MatQ::Zero(1, 4);
  ss.C(0, 1) = 2;
  ss.C(0, 3) = 1;
  ss.D = MatQ::Zero(1, 1);
  ss.D(0, 0) = -2;
  return ss;
}

StateSpace random_similarity(DeterministicRng& rng, const StateSpace& ss) {
  const Eigen::Index n = ss.n();
  for (;;) {
    MatQ t(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) t(i, j) = Rational(rng.below(-2, 2));
    if (rank(t) != n) continue;
    StateSpace out;
    out.A = solve_square(t, MatQ(ss.A * t));
    out.B = solve_square(t, ss.B);
    out.C = ss.C * t;
    out.D = ss.D;
    return out;
  }
}

}  // namespace

TEST_CASE("transfer_of recovers the scalar reference from its quadruple") {
  const StateSpace ss = siso_reference_ss();
  CHECK(tm_equal(transfer_of(ss), lni_scalar_biproper()));
}

TEST_CASE("transfer_of of a zero-state quadruple is the constant D") {
  StateSpace ss;
  ss.A = MatQ(0, 0);
  ss.B = MatQ(0, 2);
  ss.C = MatQ(2, 0);
  ss.D = (MatQ(2, 2) << Rational(1), Rational(2), Rational(3), Rational(4)).finished();
  CHECK(tm_equal(transfer_of(ss), tm_constant(ss.D)));
}

TEST_CASE("realize produces exact minimal realizations") {
  SUBCASE("scalar reference realizes at n = 4") {
    const auto [ss, meta] = realize(lni_scalar_biproper());
    CHECK(meta.n == 4);
    CHECK(meta.controllable);
    CHECK(meta.observable);
    CHECK(tm_equal(transfer_of(ss), lni_scalar_biproper()));
  }
  SUBCASE("constant matrix realizes with zero states") {
    const MatQ d = (MatQ(2, 2) << Rational(5), Rational(0), Rational(0), Rational(-1)).finished();
    const auto [ss, meta] = realize(tm_constant(d));
    CHECK(meta.n == 0);
    CHECK(ss.D == d);
    CHECK(tm_equal(transfer_of(ss), tm_constant(d)));
  }
  SUBCASE("1/s realizes as the integrator up to similarity") {
    const auto [ss, meta] = realize(scalar_tm(rf({1}, {0, 1})));
    CHECK(meta.n == 1);
    CHECK(ss.A(0, 0) == 0);
    CHECK(ss.B(0, 0) * ss.C(0, 0) == 1);
    CHECK(ss.D(0, 0) == 0);
  }
  SUBCASE("proper 2x2 reference round-trips") {
    const auto [ss, meta] = realize(lni_proper_2x2());
    CHECK(meta.controllable);
    CHECK(meta.observable);
    CHECK(tm_equal(transfer_of(ss), lni_proper_2x2()));
  }
  SUBCASE("non-proper input rejected with guidance") {
    CHECK_THROWS_WITH_AS(realize(lni_nonproper_2x2()), doctest::Contains("proper"),
                         std::invalid_argument);
  }
  SUBCASE("shared poles across columns are reduced to a minimal model") {
    const RationalFunction e = rf({1}, {1, 0, 1});
    const TransferMatrix g = make_transfer_matrix({{e, e}, {e, e}});
    const auto [ss, meta] = realize(g);
    CHECK(meta.n == 2);
    CHECK(tm_equal(transfer_of(ss), g));
  }
}

TEST_CASE("reachability and observability ranks") {
  SUBCASE("reference quadruple is minimal: ranks (4, 4)") {
    const auto [rc, ro] = ctrb_obsv_ranks(siso_reference_ss());
    CHECK(rc == 4);
    CHECK(ro == 4);
  }
  SUBCASE("zero B has reachability rank 0") {
    StateSpace ss = siso_reference_ss();
    ss.B = MatQ::Zero(4, 1);
    CHECK(ctrb_obsv_ranks(ss).first == 0);
  }
  SUBCASE("A = 0, B = I is fully reachable") {
    StateSpace ss;
    ss.A = MatQ::Zero(3, 3);
    ss.B = MatQ::Identity(3, 3);
    ss.C = MatQ::Identity(3, 3);
    ss.D = MatQ::Zero(3, 3);
    CHECK(ctrb_obsv_ranks(ss) == std::pair<int, int>{3, 3});
  }
}

TEST_CASE("minimal_realization strips unobservable and uncontrollable parts") {
  StateSpace ss;
  ss.A = MatQ::Zero(2, 2);
  ss.A(1, 1) = 3;
  ss.B = MatQ::Zero(2, 1);
  ss.B(0, 0) = 1;
  ss.B(1, 0) = 1;  // reachable but unobservable
  ss.C = MatQ::Zero(1, 2);
  ss.C(0, 0) = 1;
  ss.D = MatQ::Zero(1, 1);
  const auto [minimal, meta] = minimal_realization(ss);
  CHECK(meta.n == 1);
  CHECK(meta.controllable);
  CHECK(meta.observable);
  CHECK(tm_equal(transfer_of(minimal), transfer_of(ss)));
}

TEST_CASE("realize/transfer_of round-trip on 50 generated proper systems") {
  int done = 0;
  for (std::uint64_t seed = 1; done < 50; ++seed) {
    GenerateSpec spec;
    spec.m = 1 + static_cast<Eigen::Index>(seed % 2);
    spec.num_modes = static_cast<int>(seed % 3);
    spec.zero_pole_order = static_cast<int>(seed % 3);
    spec.infinity_pole_order = 0;  // proper
    spec.seed = seed * 1237;
    const TransferMatrix g = generate_lni(spec);
    const auto [ss, meta] = realize(g);
    CHECK(tm_equal(transfer_of(ss), g));
    CHECK(meta.controllable);
    CHECK(meta.observable);
    ++done;
  }
  CHECK(done == 50);
}

TEST_CASE("transfer_of is invariant under exact similarity transforms") {
  DeterministicRng rng(90210);
  const StateSpace base = siso_reference_ss();
  for (int trial = 0; trial < 20; ++trial) {
    const StateSpace transformed = random_similarity(rng, base);
    CHECK(tm_equal(transfer_of(transformed), lni_scalar_biproper()));
  }
}

TEST_CASE("state-space JSON round trip") {
  const StateSpace ss = siso_reference_ss();
  const auto j = state_space_to_json(ss);
  const StateSpace back = state_space_from_json(j);
  CHECK(back.A == ss.A);
  CHECK(back.B == ss.B);
  CHECK(back.C == ss.C);
  CHECK(back.D == ss.D);

  SUBCASE("dimension mismatches rejected") {
    auto bad = j;
    bad["B"] = nlohmann::json::array({nlohmann::json::array({"1"})});
    CHECK_THROWS_AS(state_space_from_json(bad), std::invalid_argument);
  }
  SUBCASE("missing field rejected") {
    auto bad = j;
    bad.erase("C");
    CHECK_THROWS_AS(state_space_from_json(bad), std::invalid_argument);
  }
}
