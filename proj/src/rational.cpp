#include "lni/rational.hpp"

#include <cctype>
#include <sstream>

namespace lni {

namespace {

bool is_integer_token(const std::string& t) {
  if (t.empty()) return false;
  std::size_t i = (t[0] == '+' || t[0] == '-') ? 1 : 0;
  if (i == t.size()) return false;
  for (; i < t.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
  return true;
}

}  // namespace

Rational rational_from_string(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  if (t.empty()) throw std::invalid_argument("empty rational literal");

  const auto slash = t.find('/');
  if (slash != std::string::npos) {
    const std::string num = t.substr(0, slash);
    const std::string den = t.substr(slash + 1);
    if (!is_integer_token(num) || !is_integer_token(den))
      throw std::invalid_argument("malformed rational literal: " + text);
    Rational r{mpz_class(num, 10), mpz_class(den, 10)};
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
    r.canonicalize();
    return r;
  }

  // Decimal or scientific form. Split off an exponent first.
  std::string mantissa = t;
  long exponent = 0;
  const auto epos = t.find_first_of("eE");
  if (epos != std::string::npos) {
    mantissa = t.substr(0, epos);
    const std::string etok = t.substr(epos + 1);
    if (!is_integer_token(etok)) throw std::invalid_argument("malformed exponent: " + text);
    exponent = std::stol(etok);
  }

  std::string digits = mantissa;
  long frac_digits = 0;
  const auto dot = mantissa.find('.');
  if (dot != std::string::npos) {
    digits = mantissa.substr(0, dot) + mantissa.substr(dot + 1);
    frac_digits = static_cast<long>(mantissa.size() - dot - 1);
  }
  if (digits == "+" || digits == "-") throw std::invalid_argument("malformed rational literal: " + text);
  if (!is_integer_token(digits)) throw std::invalid_argument("malformed rational literal: " + text);

  Rational r{mpz_class(digits, 10)};
  long net = exponent - frac_digits;
  mpz_class p10;
  mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(net < 0 ? -net : net));
  if (net >= 0)
    r *= Rational(p10);
  else
    r /= Rational(p10);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_decimal_string(const Rational& value, int digits) {
  mpf_class f(value, 64 + static_cast<unsigned>(digits) * 4);
  mp_exp_t exp = 0;
  std::string mant = f.get_str(exp, 10, static_cast<std::size_t>(digits));
  if (mant.empty() || mant == "-") return "0";
  const bool neg = mant[0] == '-';
  if (neg) mant.erase(0, 1);
  std::ostringstream out;
  if (neg) out << '-';
  out << "0." << mant << "e" << exp;
  return out.str();
}

Rational pow_rational(const Rational& base, int exponent) {
  if (exponent < 0) {
    if (base == 0) throw std::domain_error("zero to negative power");
    return 1 / pow_rational(base, -exponent);
  }
  Rational acc(1), b = base;
  int e = exponent;
  while (e > 0) {
    if (e & 1) acc *= b;
    b *= b;
    e >>= 1;
  }
  return acc;
}

std::string to_string(const ComplexRational& value) {
  if (value.im == 0) return to_string(value.re);
  std::string s = to_string(value.re);
  s += (sign(value.im) < 0) ? " - " : " + ";
  Rational a = abs(value.im);
  s += to_string(a) + "j";
  return s;
}

bool rational_sqrt(const Rational& value, Rational& root) {
  if (value < 0) return false;
  if (value == 0) {
    root = 0;
    return true;
  }
  mpz_class num = value.get_num(), den = value.get_den();
  mpz_class rn, rd;
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return false;
  if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return false;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  root = Rational(rn, rd);
  root.canonicalize();
  return true;
}

}  // namespace lni
