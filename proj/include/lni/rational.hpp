#pragma once

#include <gmpxx.h>

#include <Eigen/Core>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace lni {

// Exact arbitrary-precision rational scalar. GMP keeps the invariants
// (reduced fraction, positive denominator) through mpq canonicalization.
using Rational = mpq_class;

using MatQ = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using VecQ = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

/// Parses "p/q", integer, or decimal ("-1.25", "3e-2") strings exactly.
Rational rational_from_string(const std::string& text);

/// Canonical form: "p" when the denominator is 1, else "p/q".
std::string to_string(const Rational& value);

/// Decimal rendering with the given number of significant digits.
std::string to_decimal_string(const Rational& value, int digits = 17);

inline int sign(const Rational& value) { return sgn(value); }

Rational pow_rational(const Rational& base, int exponent);

struct ComplexRational {
  Rational re;
  Rational im;

  ComplexRational() : re(0), im(0) {}
  ComplexRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  explicit ComplexRational(const Rational& r) : re(r), im(0) {}

  static ComplexRational imaginary_unit() { return {Rational(0), Rational(1)}; }

  bool is_zero() const { return re == 0 && im == 0; }
  ComplexRational conj() const { return {re, -im}; }

  ComplexRational operator-() const { return {-re, -im}; }
  ComplexRational operator+(const ComplexRational& o) const { return {re + o.re, im + o.im}; }
  ComplexRational operator-(const ComplexRational& o) const { return {re - o.re, im - o.im}; }
  ComplexRational operator*(const ComplexRational& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  ComplexRational operator/(const ComplexRational& o) const {
    Rational norm = o.re * o.re + o.im * o.im;
    if (norm == 0) throw std::domain_error("division by zero complex rational");
    return {(re * o.re + im * o.im) / norm, (im * o.re - re * o.im) / norm};
  }
  bool operator==(const ComplexRational& o) const { return re == o.re && im == o.im; }
  bool operator!=(const ComplexRational& o) const { return !(*this == o); }
};

std::string to_string(const ComplexRational& value);

/// True iff value = (p/q)^2 has a rational square root; root receives it.
bool rational_sqrt(const Rational& value, Rational& root);

// Deterministic pseudo-random draws used by generators and property tests.
// A thin xorshift-based engine so that fixed seeds reproduce byte-identical
// streams on every platform and standard library.
class DeterministicRng {
 public:
  explicit DeterministicRng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}

  std::uint64_t next() {
    std::uint64_t x = state_;
    x ^= x << 13;
    x ^= x >> 7;
    x ^= x << 17;
    state_ = x;
    return x;
  }

  /// Uniform integer in [lo, hi].
  long below(long lo, long hi) {
    if (hi < lo) throw std::invalid_argument("empty range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(next() % span);
  }

  Rational small_rational(long max_abs_num = 3, long max_den = 3) {
    Rational r(below(-max_abs_num, max_abs_num), below(1, max_den));
    r.canonicalize();
    return r;
  }

 private:
  std::uint64_t state_;
};

}  // namespace lni

namespace Eigen {

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

}  // namespace Eigen
