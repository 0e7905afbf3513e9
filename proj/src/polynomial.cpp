#include "lni/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace lni {

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::monomial(Rational c, int k) {
  if (c == 0 || k < 0) return Poly();
  std::vector<Rational> v(static_cast<std::size_t>(k) + 1, Rational(0));
  v.back() = std::move(c);
  return Poly(std::move(v));
}

int Poly::order_at_zero() const {
  if (is_zero()) return 0;
  int k = 0;
  while (coeffs_[static_cast<std::size_t>(k)] == 0) ++k;
  return k;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<Rational> v(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] = coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) v[i] += o.coeffs_[i];
  return Poly(std::move(v));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly();
  std::vector<Rational> v(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * o.coeffs_[j];
  return Poly(std::move(v));
}

Poly Poly::operator*(const Rational& c) const {
  Poly r = *this;
  for (auto& x : r.coeffs_) x *= c;
  r.trim();
  return r;
}

Poly Poly::operator/(const Rational& c) const {
  if (c == 0) throw std::domain_error("division of polynomial by zero scalar");
  return *this * (Rational(1) / c);
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return Poly();
  std::vector<Rational> v(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
  return Poly(std::move(v));
}

Rational Poly::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

ComplexRational Poly::eval(const ComplexRational& x) const {
  ComplexRational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * x + ComplexRational(*it);
  return acc;
}

Poly Poly::negate_argument() const {
  Poly r = *this;
  for (std::size_t i = 1; i < r.coeffs_.size(); i += 2) r.coeffs_[i] = -r.coeffs_[i];
  return r;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return *this / leading();
}

Poly Poly::shift_down(int k) const {
  if (k == 0) return *this;
  if (order_at_zero() < k || is_zero()) throw std::domain_error("polynomial not divisible by s^k");
  return Poly(std::vector<Rational>(coeffs_.begin() + k, coeffs_.end()));
}

std::string Poly::str(char var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational c = coeff(k);
    if (c == 0) continue;
    if (!first) out << (sign(c) < 0 ? " - " : " + ");
    if (first && sign(c) < 0) out << "-";
    first = false;
    Rational a = abs(c);
    if (a != 1 || k == 0) out << to_string(a);
    if (k >= 1) {
      if (a != 1) out << "*";
      out << var;
      if (k > 1) out << "^" << k;
    }
  }
  return out.str();
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  Poly rem = a;
  if (rem.degree() < b.degree()) return {Poly(), rem};
  std::vector<Rational> q(static_cast<std::size_t>(rem.degree() - b.degree()) + 1, Rational(0));
  const Rational lead = b.leading();
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    const int shift = rem.degree() - b.degree();
    const Rational factor = rem.leading() / lead;
    q[static_cast<std::size_t>(shift)] = factor;
    rem -= Poly::monomial(factor, shift) * b;
  }
  return {Poly(std::move(q)), rem};
}

Poly divide_exact(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
  return q;
}

bool divides(const Poly& d, const Poly& a) {
  if (d.is_zero()) return a.is_zero();
  return divmod(a, d).second.is_zero();
}

Poly poly_gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = divmod(x, y).second;
    x = std::move(y);
    y = r.is_zero() ? r : r.monic();  // monic steps keep coefficients tame
  }
  return x.monic();
}

Poly poly_lcm(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  return divide_exact(a * b, poly_gcd(a, b)).monic();
}

PolyXgcd poly_xgcd(const Poly& a, const Poly& b) {
  Poly r0 = a, r1 = b;
  Poly x0 = Poly::one(), x1 = Poly::zero();
  Poly y0 = Poly::zero(), y1 = Poly::one();
  while (!r1.is_zero()) {
    const auto [q, r] = divmod(r0, r1);
    r0 = std::exchange(r1, r);
    x0 = std::exchange(x1, x0 - q * x1);
    y0 = std::exchange(y1, y0 - q * y1);
  }
  if (r0.is_zero()) return {r0, x0, y0};
  const Rational lead = r0.leading();
  return {r0 / lead, x0 / lead, y0 / lead};
}

std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p) {
  if (p.is_zero()) throw std::domain_error("squarefree decomposition of zero polynomial");
  std::vector<std::pair<Poly, int>> out;
  Poly f = p.monic();
  if (f.degree() == 0) return out;

  // Yun's algorithm over a field of characteristic zero.
  Poly g = poly_gcd(f, f.derivative());
  Poly w = divide_exact(f, g);
  int mult = 1;
  while (w.degree() > 0) {
    Poly y = poly_gcd(w, g);
    Poly factor = divide_exact(w, y);
    if (factor.degree() > 0) out.emplace_back(factor.monic(), mult);
    g = divide_exact(g, y);
    w = std::move(y);
    ++mult;
  }
  return out;
}

namespace {

std::vector<Poly> sturm_chain(const Poly& p) {
  std::vector<Poly> chain;
  chain.push_back(p);
  chain.push_back(p.derivative());
  while (!chain.back().is_zero()) {
    const Poly& a = chain[chain.size() - 2];
    const Poly& b = chain.back();
    Poly r = -divmod(a, b).second;
    if (r.is_zero()) break;
    // Scale by a positive constant only; sign information carries the count.
    chain.push_back(r / abs(r.leading()));
  }
  return chain;
}

int sign_at(const Poly& p, const std::optional<Rational>& point, bool plus_infinity) {
  if (p.is_zero()) return 0;
  if (!point) {
    const int lead = sign(p.leading());
    if (plus_infinity) return lead;
    return (p.degree() % 2 == 0) ? lead : -lead;
  }
  return sign(p.eval(*point));
}

int sign_variations(const std::vector<Poly>& chain, const std::optional<Rational>& point,
                    bool plus_infinity) {
  int variations = 0, prev = 0;
  for (const Poly& p : chain) {
    const int s = sign_at(p, point, plus_infinity);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++variations;
    prev = s;
  }
  return variations;
}

// Distinct real roots of squarefree p in the half-open interval (a, b].
int roots_in_half_open(const std::vector<Poly>& chain, const std::optional<Rational>& a,
                       const std::optional<Rational>& b) {
  return sign_variations(chain, a, false) - sign_variations(chain, b, true);
}

Rational cauchy_root_bound(const Poly& p) {
  Rational bound(0);
  const Rational lead = abs(p.leading());
  for (int k = 0; k < p.degree(); ++k) {
    Rational c = abs(p.coeff(k)) / lead;
    if (c > bound) bound = c;
  }
  return bound + 1;
}

struct IsolationInterval {
  Rational lo, hi;  // open interval containing exactly one root, or lo==hi (exact root)
};

// Invariant: lo and hi are never roots of p, so (lo, hi] counting needs no
// endpoint correction and later sign-change refinement stays well defined.
void isolate_recursive(const Poly& p, const std::vector<Poly>& chain, const Rational& lo,
                       const Rational& hi, std::vector<IsolationInterval>& out) {
  const int count = roots_in_half_open(chain, lo, hi);
  if (count == 0) return;
  if (count == 1) {
    out.push_back({lo, hi});
    return;
  }
  const Rational mid = (lo + hi) / 2;
  if (p.eval(mid) != 0) {
    isolate_recursive(p, chain, lo, mid, out);
    isolate_recursive(p, chain, mid, hi, out);
    return;
  }
  out.push_back({mid, mid});
  // Shrink a punctured neighbourhood of mid until it contains no other root
  // and its endpoints are not roots themselves.
  Rational delta = (hi - lo) / 4;
  while (p.eval(mid - delta) == 0 || p.eval(mid + delta) == 0 ||
         roots_in_half_open(chain, mid - delta, mid + delta) > 1)
    delta /= 2;
  isolate_recursive(p, chain, lo, mid - delta, out);
  isolate_recursive(p, chain, mid + delta, hi, out);
}

// Disjoint isolating intervals for all real roots of squarefree p.
std::vector<IsolationInterval> isolate_real_roots(const Poly& p) {
  std::vector<IsolationInterval> out;
  if (p.degree() <= 0) return out;
  const std::vector<Poly> chain = sturm_chain(p);
  const Rational bound = cauchy_root_bound(p);  // strict: no roots at +-bound
  isolate_recursive(p, chain, -bound, bound, out);
  return out;
}

}  // namespace

int count_real_roots_in(const Poly& p, const RationalInterval& interval) {
  if (p.is_zero()) throw std::domain_error("root counting requires a nonzero polynomial");
  if (poly_gcd(p, p.derivative()).degree() > 0)
    throw std::invalid_argument("root counting requires a squarefree polynomial");
  if (p.degree() == 0) return 0;
  if (interval.lo && interval.hi && !(*interval.lo < *interval.hi)) return 0;

  const std::vector<Poly> chain = sturm_chain(p);
  int count = roots_in_half_open(chain, interval.lo, interval.hi);
  // (a, b] -> (a, b): drop b when it is a root.
  if (interval.hi && p.eval(*interval.hi) == 0) --count;
  return count;
}

RationalRootSplit rational_roots(const Poly& squarefree) {
  if (squarefree.is_zero()) throw std::domain_error("rational_roots requires a nonzero polynomial");
  RationalRootSplit split;
  Poly work = squarefree.monic();
  if (work.degree() == 0) {
    split.leftover = work;
    return split;
  }

  // Root at zero is visible structurally.
  if (work.order_at_zero() > 0) {
    split.roots.emplace_back(0);
    work = work.shift_down(work.order_at_zero());
  }

  // Clear denominators to an integer polynomial f, then transport to the
  // monic integer polynomial g(v) = a_n^(d-1) f(v / a_n): rational roots of f
  // correspond to *integer* roots v of g, so bisection down to width < 1
  // leaves at most a couple of integer candidates to test exactly.
  mpz_class den_lcm(1);
  for (const Rational& c : work.coeffs()) {
    mpz_class d = c.get_den();
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
  }
  Poly f = work * Rational(den_lcm);
  const Rational lead = f.leading();

  for (const auto& iso : isolate_real_roots(f)) {
    if (iso.lo == iso.hi) {  // midpoint hit during isolation
      split.roots.push_back(iso.lo);
      continue;
    }
    // Scale the isolating interval from f's root x to g's root v = a_n * x.
    Rational xlo = iso.lo, xhi = iso.hi;
    bool midpoint_root = false;
    // Bisect in x until the v-interval spans fewer than two integers.
    while (abs(xhi * lead - xlo * lead) >= 1) {
      const Rational mid = (xlo + xhi) / 2;
      const Rational fmid = f.eval(mid);
      if (fmid == 0) {
        split.roots.push_back(mid);
        midpoint_root = true;
        break;
      }
      if (sign(f.eval(xlo)) * sign(fmid) < 0)
        xhi = mid;
      else
        xlo = mid;
    }
    if (midpoint_root) continue;
    // Test the (at most two) integer candidates v with v/lead inside (xlo, xhi).
    Rational vlo = xlo * lead, vhi = xhi * lead;
    if (vlo > vhi) std::swap(vlo, vhi);
    mpz_class vfirst, vlast;
    mpz_cdiv_q(vfirst.get_mpz_t(), vlo.get_num().get_mpz_t(), vlo.get_den().get_mpz_t());
    mpz_fdiv_q(vlast.get_mpz_t(), vhi.get_num().get_mpz_t(), vhi.get_den().get_mpz_t());
    for (mpz_class v = vfirst; v <= vlast; ++v) {
      Rational candidate = Rational(v) / Rational(lead);
      candidate.canonicalize();
      if (!(xlo < candidate && candidate < xhi)) continue;
      if (f.eval(candidate) == 0) {
        split.roots.push_back(candidate);
        break;
      }
    }
  }

  split.leftover = work;
  for (const Rational& r : split.roots) {
    if (r == 0) continue;  // already stripped
    split.leftover = divide_exact(split.leftover, Poly{-r, Rational(1)});
  }
  split.leftover = split.leftover.monic();
  std::sort(split.roots.begin(), split.roots.end());
  return split;
}

}  // namespace lni
