#include "lni/rational_function.hpp"

namespace lni {

RationalFunction::RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = Poly::one();
    return;
  }
  const Poly g = poly_gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = divide_exact(num_, g);
    den_ = divide_exact(den_, g);
  }
  const Rational lead = den_.leading();
  if (lead != 1) {
    num_ = num_ / lead;
    den_ = den_ / lead;
  }
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
  return {num_ * o.den_ + o.num_ * den_, den_ * o.den_};
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
  return {num_ * o.den_ - o.num_ * den_, den_ * o.den_};
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  return {num_ * o.num_, den_ * o.den_};
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
  if (o.is_zero()) throw std::domain_error("division by zero rational function");
  return {num_ * o.den_, den_ * o.num_};
}

RationalFunction RationalFunction::negate_argument() const {
  return {num_.negate_argument(), den_.negate_argument()};
}

Rational RationalFunction::eval(const Rational& x) const {
  const Rational d = den_.eval(x);
  if (d == 0) throw std::domain_error("evaluation at a pole");
  return num_.eval(x) / d;
}

ComplexRational RationalFunction::eval(const ComplexRational& x) const {
  const ComplexRational d = den_.eval(x);
  if (d.is_zero()) throw std::domain_error("evaluation at a pole");
  return num_.eval(x) / d;
}

Rational RationalFunction::value_at_infinity() const {
  if (num_.is_zero()) return Rational(0);
  if (num_.degree() > den_.degree()) throw std::domain_error("value at infinity of a non-proper entry");
  if (num_.degree() < den_.degree()) return Rational(0);
  return num_.leading() / den_.leading();
}

std::string RationalFunction::str() const {
  if (is_polynomial()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace lni
