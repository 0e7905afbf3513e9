#include "doctest.h"
#include "lni/polynomial.hpp"

using namespace lni;

namespace {

Poly s_power(int k) { return Poly::monomial(Rational(1), k); }

Poly random_poly(DeterministicRng& rng, int max_degree) {
  std::vector<Rational> coeffs;
  const int deg = static_cast<int>(rng.below(0, max_degree));
  for (int i = 0; i <= deg; ++i) coeffs.push_back(rng.small_rational());
  return Poly(std::move(coeffs));
}

}  // namespace

TEST_CASE("polynomial arithmetic basics") {
  const Poly s = Poly::variable();
  const Poly a = s * s + Poly::one();            // s^2 + 1
  const Poly b = s * s;                          // s^2
  CHECK((a * b) == Poly({Rational(0), Rational(0), Rational(1), Rational(0), Rational(1)}));
  CHECK((a + b).degree() == 2);
  CHECK((a - a).is_zero());
  CHECK(a.eval(Rational(2)) == Rational(5));
}

TEST_CASE("divmod: long division cross-checked by recomposition") {
  // (1 - 2s^4) / (s^4 + s^2): quotient -2, remainder 2s^2 + 1.
  const Poly num({Rational(1), Rational(0), Rational(0), Rational(0), Rational(-2)});
  const Poly den({Rational(0), Rational(0), Rational(1), Rational(0), Rational(1)});
  const auto [q, r] = divmod(num, den);
  CHECK(q == Poly(Rational(-2)));
  CHECK(r == Poly({Rational(1), Rational(0), Rational(2)}));
  CHECK(q * den + r == num);
  CHECK_THROWS_AS(divmod(num, Poly::zero()), std::domain_error);
}

TEST_CASE("gcd is monic and divides both inputs") {
  const Poly s = Poly::variable();
  const Poly a = s * s + Poly::one();
  const Poly b = (s * s + Poly::one()) * s;  // s^3 + s
  const Poly g = poly_gcd(a, b);
  CHECK(g == a);  // s^2 + 1 is already monic
  CHECK(divides(g, a));
  CHECK(divides(g, b));
}

TEST_CASE("squarefree decomposition recovers visible factorizations") {
  const Poly s = Poly::variable();
  SUBCASE("s^2 (s^2+1)") {
    const Poly p = s * s * (s * s + Poly::one());
    const auto parts = squarefree_decomposition(p);
    REQUIRE(parts.size() == 2);
    for (const auto& [factor, mult] : parts) {
      if (mult == 2)
        CHECK(factor == s);
      else
        CHECK(factor == s * s + Poly::one());
    }
  }
  SUBCASE("irreducible stays intact") {
    const auto parts = squarefree_decomposition(s * s + Poly::one());
    REQUIRE(parts.size() == 1);
    CHECK(parts[0].second == 1);
  }
  SUBCASE("(s^2+4)^2 s expanded, verified by recomposition") {
    const Poly q = s * s + Poly(Rational(4));
    const Poly p = q * q * s;
    const auto parts = squarefree_decomposition(p);
    Poly recomposed = Poly::one();
    for (const auto& [factor, mult] : parts)
      for (int i = 0; i < mult; ++i) recomposed *= factor;
    CHECK(recomposed.monic() == p.monic());
    REQUIRE(parts.size() == 2);
    for (const auto& [factor, mult] : parts) {
      if (factor.degree() == 2) CHECK(mult == 2);
      if (factor.degree() == 1) CHECK(mult == 1);
    }
  }
  SUBCASE("zero polynomial rejected") {
    CHECK_THROWS_AS(squarefree_decomposition(Poly::zero()), std::domain_error);
  }
}

TEST_CASE("squarefree recomposition property over random products") {
  DeterministicRng rng(2024);
  int done = 0;
  while (done < 40) {
    Poly p = Poly::one();
    for (int f = 0; f < 3; ++f) {
      Poly factor = random_poly(rng, 2);
      if (factor.degree() < 1) continue;
      const int mult = static_cast<int>(rng.below(1, 3));
      for (int i = 0; i < mult; ++i) p *= factor;
    }
    if (p.degree() < 1) continue;
    ++done;
    Poly recomposed = Poly::one();
    for (const auto& [factor, mult] : squarefree_decomposition(p)) {
      CHECK(poly_gcd(factor, factor.derivative()).degree() == 0);  // squarefree
      for (int i = 0; i < mult; ++i) recomposed *= factor;
    }
    CHECK(recomposed.monic() == p.monic());
  }
}

TEST_CASE("sturm root counting on the given intervals") {
  const Poly u = Poly::variable();
  SUBCASE("u + 1 has one root below zero") {
    CHECK(count_real_roots_in(u + Poly::one(), RationalInterval::negative()) == 1);
  }
  SUBCASE("u^2 + 1 has no real roots") {
    CHECK(count_real_roots_in(u * u + Poly::one(), RationalInterval::whole()) == 0);
  }
  SUBCASE("(u+1)(u+4) expanded has two roots below zero") {
    const Poly p({Rational(4), Rational(5), Rational(1)});
    CHECK(count_real_roots_in(p, RationalInterval::negative()) == 2);
    CHECK(count_real_roots_in(p, RationalInterval{Rational(-2), std::nullopt}) == 1);
  }
  SUBCASE("open interval excludes endpoint roots") {
    const Poly p({Rational(-1), Rational(1)});  // root at 1
    CHECK(count_real_roots_in(p, RationalInterval{Rational(0), Rational(1)}) == 0);
    CHECK(count_real_roots_in(p, RationalInterval{Rational(0), Rational(2)}) == 1);
  }
  SUBCASE("non-squarefree input rejected") {
    const Poly p = (u + Poly::one()) * (u + Poly::one());
    CHECK_THROWS_AS(count_real_roots_in(p, RationalInterval::whole()), std::invalid_argument);
  }
}

TEST_CASE("root counts over an interval partition sum to the total") {
  DeterministicRng rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    Poly p = random_poly(rng, 5);
    if (p.degree() < 1) continue;
    if (poly_gcd(p, p.derivative()).degree() > 0) continue;
    const int total = count_real_roots_in(p, RationalInterval::whole());
    const Rational cut1(-1), cut2(1);
    int parts = count_real_roots_in(p, RationalInterval{std::nullopt, cut1}) +
                count_real_roots_in(p, RationalInterval{cut1, cut2}) +
                count_real_roots_in(p, RationalInterval{cut2, std::nullopt});
    if (p.eval(cut1) == 0) ++parts;
    if (p.eval(cut2) == 0) ++parts;
    CHECK(parts == total);
  }
}

TEST_CASE("rational root extraction finds exactly the rational roots") {
  const Poly u = Poly::variable();
  SUBCASE("roots at -1/2 and 3, irrational cofactor u^2 - 2") {
    const Poly p = (u * Rational(2) + Poly::one()) * (u - Poly(Rational(3))) *
                   (u * u - Poly(Rational(2)));
    const auto split = rational_roots(p.monic());
    REQUIRE(split.roots.size() == 2);
    CHECK(split.roots[0] == Rational(-1, 2));
    CHECK(split.roots[1] == Rational(3));
    CHECK(split.leftover == u * u - Poly(Rational(2)));
  }
  SUBCASE("fully irrational") {
    const auto split = rational_roots(u * u - Poly(Rational(3)));
    CHECK(split.roots.empty());
    CHECK(split.leftover.degree() == 2);
  }
  SUBCASE("root at zero") {
    const auto split = rational_roots(u * (u + Poly(Rational(5))));
    REQUIRE(split.roots.size() == 2);
    CHECK(split.roots[0] == Rational(-5));
    CHECK(split.roots[1] == Rational(0));
  }
  SUBCASE("random products of linear factors recover all roots") {
    DeterministicRng rng(7);
    for (int trial = 0; trial < 25; ++trial) {
      std::vector<Rational> roots;
      Poly p = Poly::one();
      for (int k = 0; k < 3; ++k) {
        Rational r = rng.small_rational(4, 3);
        bool duplicate = false;
        for (const auto& existing : roots) duplicate |= (existing == r);
        if (duplicate) continue;
        roots.push_back(r);
        p *= Poly{-r, Rational(1)};
      }
      auto split = rational_roots(p);
      std::sort(roots.begin(), roots.end());
      CHECK(split.roots == roots);
      CHECK(split.leftover.degree() == 0);
    }
  }
}

TEST_CASE("negate_argument and helpers") {
  const Poly s = Poly::variable();
  const Poly p = s * s * s + s * Rational(2) + Poly::one();
  const Poly q = p.negate_argument();
  CHECK(q.eval(Rational(-3)) == p.eval(Rational(3)));
  CHECK(s_power(4).shift_down(2) == s_power(2));
  CHECK_THROWS_AS((s + Poly::one()).shift_down(1), std::domain_error);
  CHECK(Poly({Rational(2), Rational(4)}).monic() == Poly({Rational(1, 2), Rational(1)}));
}
