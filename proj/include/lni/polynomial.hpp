#pragma once

#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

#include "lni/rational.hpp"

namespace lni {

// Univariate polynomial over the exact rationals, coefficients stored in
// ascending degree. Canonical form: no trailing zero coefficients, so
// structural equality is coefficient-wise comparison.
class Poly {
 public:
  Poly() = default;
  Poly(std::initializer_list<Rational> ascending) : coeffs_(ascending) { trim(); }
  explicit Poly(Rational constant) : coeffs_{std::move(constant)} { trim(); }
  explicit Poly(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) { trim(); }

  static Poly zero() { return Poly(); }
  static Poly one() { return Poly(Rational(1)); }
  static Poly variable() { return Poly{Rational(0), Rational(1)}; }
  /// c * s^k
  static Poly monomial(Rational c, int k);

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rational coeff(int k) const {
    return (k >= 0 && k < static_cast<int>(coeffs_.size())) ? coeffs_[k] : Rational(0);
  }
  Rational leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }

  /// Multiplicity of the root at zero (index of first nonzero coefficient).
  int order_at_zero() const;

  bool operator==(const Poly& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Rational& c) const;
  Poly operator/(const Rational& c) const;
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly derivative() const;
  Rational eval(const Rational& x) const;
  ComplexRational eval(const ComplexRational& x) const;

  /// p(-s); flips the sign of odd coefficients.
  Poly negate_argument() const;
  Poly monic() const;
  /// p / s^k, requires s^k | p.
  Poly shift_down(int k) const;

  std::string str(char var = 's') const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Quotient and remainder of a by b; throws on zero divisor.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
/// Exact division; throws if the remainder is nonzero.
Poly divide_exact(const Poly& a, const Poly& b);
/// Monic gcd (zero polynomial when both inputs are zero).
Poly poly_gcd(const Poly& a, const Poly& b);
Poly poly_lcm(const Poly& a, const Poly& b);
bool divides(const Poly& d, const Poly& a);

struct PolyXgcd {
  Poly g, x, y;  // x*a + y*b = g, g monic
};
/// Extended Euclid over the rationals.
PolyXgcd poly_xgcd(const Poly& a, const Poly& b);

/// Yun squarefree decomposition: pairwise-coprime squarefree monic factors
/// with multiplicities whose weighted product equals p up to a constant.
std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p);

// Open interval with rational or infinite endpoints.
struct RationalInterval {
  std::optional<Rational> lo;  // nullopt = -inf
  std::optional<Rational> hi;  // nullopt = +inf
  static RationalInterval whole() { return {std::nullopt, std::nullopt}; }
  static RationalInterval negative() { return {std::nullopt, Rational(0)}; }
};

/// Exact count of distinct real roots of a squarefree polynomial in an open
/// interval, via Sturm chains. Rejects non-squarefree input.
int count_real_roots_in(const Poly& p, const RationalInterval& interval);

struct RationalRootSplit {
  std::vector<Rational> roots;  // distinct rational roots of the squarefree input
  Poly leftover;                // monic cofactor with no rational roots
};

/// Finds every rational root of a squarefree polynomial exactly (Sturm
/// isolation plus integer-root transport, no divisor enumeration).
RationalRootSplit rational_roots(const Poly& squarefree);

}  // namespace lni
