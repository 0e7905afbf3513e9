#pragma once

#include <string>

#include "lni/polynomial.hpp"

namespace lni {

// Rational function of s over the exact rationals. Canonical form:
// gcd(num, den) = 1 and den monic, so equality is structural.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(Poly::one()) {}
  RationalFunction(long value) : num_(Rational(value)), den_(Poly::one()) {}  // NOLINT: Eigen needs Scalar(0)
  RationalFunction(Rational value) : num_(std::move(value)), den_(Poly::one()) {}
  RationalFunction(Poly num, Poly den);

  static RationalFunction variable() { return {Poly::variable(), Poly::one()}; }
  static RationalFunction from_poly(Poly p) { return {std::move(p), Poly::one()}; }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }
  /// deg num - deg den; negative for strictly proper entries.
  int relative_degree() const { return num_.is_zero() ? INT_MIN_DEGREE : num_.degree() - den_.degree(); }
  bool is_proper() const { return num_.is_zero() || num_.degree() <= den_.degree(); }

  /// Pole order at s = 0 (den is coprime to num, so this is structural).
  int pole_order_at_zero() const { return den_.order_at_zero(); }

  RationalFunction operator-() const;
  RationalFunction operator+(const RationalFunction& o) const;
  RationalFunction operator-(const RationalFunction& o) const;
  RationalFunction operator*(const RationalFunction& o) const;
  RationalFunction operator/(const RationalFunction& o) const;
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }
  bool operator==(const RationalFunction& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RationalFunction& o) const { return !(*this == o); }

  /// f(-s), canonicalized.
  RationalFunction negate_argument() const;
  Rational eval(const Rational& x) const;
  ComplexRational eval(const ComplexRational& x) const;
  bool is_pole(const ComplexRational& x) const { return den_.eval(x).is_zero(); }
  /// Value at s = infinity; throws for non-proper entries.
  Rational value_at_infinity() const;

  std::string str() const;

  static constexpr int INT_MIN_DEGREE = -0x7fffffff;

 private:
  Poly num_, den_;
};

inline RationalFunction operator*(const Rational& c, const RationalFunction& f) {
  return RationalFunction(c) * f;
}

}  // namespace lni

namespace Eigen {

template <>
struct NumTraits<lni::RationalFunction> : GenericNumTraits<lni::RationalFunction> {
  typedef lni::RationalFunction Real;
  typedef lni::RationalFunction NonInteger;
  typedef lni::RationalFunction Nested;
  static inline Real epsilon() { return Real(); }
  static inline Real dummy_precision() { return Real(); }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 10,
    AddCost = 400,
    MulCost = 400
  };
};

}  // namespace Eigen
