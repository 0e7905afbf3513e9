#include "lni/spectral.hpp"

#include <algorithm>
#include <stdexcept>

namespace lni {

namespace {

// Laurent coefficients of n/d at s = 0 for a pole of order k <= 2:
// c2 / s^2 + c1 / s + O(1). For k = 1 only c1; for k = 0 nothing.
void laurent_at_zero(const RationalFunction& f, Rational& c2, Rational& c1) {
  c2 = 0;
  c1 = 0;
  const int k = f.pole_order_at_zero();
  if (k == 0) return;
  const Poly deflated = f.den().shift_down(k);
  const Rational d0 = deflated.eval(Rational(0));
  const Rational n0 = f.num().eval(Rational(0));
  if (k == 1) {
    c1 = n0 / d0;
    return;
  }
  c2 = n0 / d0;
  // d/ds [num/deflated] at 0.
  const Rational n1 = f.num().derivative().eval(Rational(0));
  const Rational d1 = deflated.derivative().eval(Rational(0));
  c1 = (n1 * d0 - n0 * d1) / (d0 * d0);
}

MatQ zero_mat(Eigen::Index m) { return MatQ::Zero(m, m); }

double rational_to_double(const Rational& r) { return r.get_d(); }

Eigen::MatrixXd mat_to_double(const MatQ& m) {
  Eigen::MatrixXd d(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) d(i, j) = rational_to_double(m(i, j));
  return d;
}

// Exact rational numerator (alpha*s + beta) of the (s^2 + r) mode inside one
// entry, via inverse of the deflated denominator modulo s^2 + r.
void mode_numerator(const RationalFunction& f, const Rational& r, Rational& alpha,
                    Rational& beta) {
  alpha = 0;
  beta = 0;
  const Poly quadratic{r, Rational(0), Rational(1)};  // s^2 + r
  if (!divides(quadratic, f.den())) return;
  const Poly deflated = divide_exact(f.den(), quadratic);
  if (divides(quadratic, deflated))
    throw std::domain_error("higher-order finite imaginary pole at omega^2 = " + to_string(r));
  const PolyXgcd ext = poly_xgcd(deflated, quadratic);
  // deflated coprime to s^2 + r, so ext.g == 1 and ext.x inverts deflated.
  const Poly v = divmod(f.num() * ext.x, quadratic).second;
  alpha = v.coeff(1);
  beta = v.coeff(0);
}

MatQ random_int_matrix(DeterministicRng& rng, Eigen::Index m, long range = 2) {
  MatQ a(m, m);
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < m; ++j) a(i, j) = Rational(rng.below(-range, range));
  return a;
}

MatQ random_psd(DeterministicRng& rng, Eigen::Index m) {
  for (;;) {
    const MatQ a = random_int_matrix(rng, m);
    MatQ gram = a.transpose() * a;
    if (!is_zero(gram)) return gram;
  }
}

MatQ random_skew(DeterministicRng& rng, Eigen::Index m) {
  const MatQ a = random_int_matrix(rng, m);
  return a - MatQ(a.transpose());
}

MatQ random_symmetric(DeterministicRng& rng, Eigen::Index m) {
  const MatQ a = random_int_matrix(rng, m);
  return a + MatQ(a.transpose());
}

}  // namespace

SpectralData SpectralData::zero(Eigen::Index m) {
  SpectralData d;
  d.m = m;
  d.s2_coeff = zero_mat(m);
  d.s_coeff = zero_mat(m);
  d.inv_s_coeff = zero_mat(m);
  d.inv_s2_coeff = zero_mat(m);
  d.value_at_inf = zero_mat(m);
  return d;
}

ExtremeLimits limits_at_extremes(const TransferMatrix& g) {
  require_square(g, "limits_at_extremes");
  const Eigen::Index m = g.rows();
  if (zero_pole_order(g) > 2) throw std::domain_error("violates double-pole bound at s = 0");
  if (infinity_pole_order(g) > 2)
    throw std::domain_error("violates double-pole bound at s = infinity");

  ExtremeLimits lim{zero_mat(m), zero_mat(m), zero_mat(m), zero_mat(m), zero_mat(m)};
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < m; ++j) {
      const auto& f = g(i, j);
      if (f.is_zero()) continue;
      const auto [q, rem] = divmod(f.num(), f.den());
      lim.s2_coeff(i, j) = q.coeff(2);
      lim.s_coeff(i, j) = q.coeff(1);
      lim.value_at_inf(i, j) = q.coeff(0);
      Rational c2, c1;
      laurent_at_zero(f, c2, c1);
      lim.inv_s2_coeff(i, j) = c2;
      lim.inv_s_coeff(i, j) = c1;
    }
  return lim;
}

ModeNumerator mode_numerator_at(const TransferMatrix& g, const Rational& omega_squared) {
  require_square(g, "mode_numerator_at");
  const Eigen::Index m = g.rows();
  ModeNumerator num{zero_mat(m), zero_mat(m)};
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < m; ++j)
      mode_numerator(g(i, j), omega_squared, num.s_coeff(i, j), num.constant(i, j));
  return num;
}

ResidueMatrix residue_at(const TransferMatrix& g, const Rational& omega_squared,
                         const ResidueOptions& options) {
  require_square(g, "residue_at");
  if (omega_squared <= 0) throw std::invalid_argument("residue_at expects omega^2 > 0");
  const Eigen::Index m = g.rows();
  const Poly quadratic{omega_squared, Rational(0), Rational(1)};
  if (!divides(quadratic, denominator_lcm(g)))
    throw std::invalid_argument("omega^2 = " + to_string(omega_squared) +
                                " does not locate a pole of the system");

  const ModeNumerator num = mode_numerator_at(g, omega_squared);
  const MatQ& alpha = num.s_coeff;
  const MatQ& beta = num.constant;

  ResidueMatrix res;
  res.omega_squared = omega_squared;
  Rational omega;
  if (rational_sqrt(omega_squared, omega)) {
    res.exact = true;
    res.value = ComplexMatQ(beta / (2 * omega), alpha / Rational(2));
    res.value_re = mat_to_double(res.value.re);
    res.value_im = mat_to_double(res.value.im);
    res.hermitian = res.value.is_hermitian();
    res.hermitian_defect = rational_to_double(res.value.hermitian_defect());
    res.tolerance = 0.0;
    return res;
  }

  // Numeric rendering of K = beta/(2w) + j*alpha/2 at the declared precision.
  res.exact = false;
  res.precision_bits = options.precision_bits;
  res.tolerance = options.tolerance;
  const auto prec = static_cast<unsigned>(options.precision_bits);
  const mpf_class w = sqrt(mpf_class(omega_squared, prec));
  Eigen::MatrixXd re(m, m), im(m, m);
  mpf_class defect(0, prec);
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < m; ++j) {
      const mpf_class re_ij = mpf_class(beta(i, j), prec) / (2 * w);
      re(i, j) = re_ij.get_d();
      im(i, j) = rational_to_double(alpha(i, j) / 2);
      // K - K^* = (beta - beta^T)/(2w) + j(alpha + alpha^T)/2 entrywise.
      mpf_class dre = mpf_class(beta(i, j) - beta(j, i), prec) / (2 * w);
      mpf_class dim = mpf_class(alpha(i, j) + alpha(j, i), prec) / 2;
      if (abs(dre) > defect) defect = abs(dre);
      if (abs(dim) > defect) defect = abs(dim);
    }
  res.value_re = re;
  res.value_im = im;
  res.hermitian_defect = defect.get_d();
  res.hermitian = res.hermitian_defect <= options.tolerance;
  return res;
}

SpectralData partial_fraction_expand(const TransferMatrix& g, const ResidueOptions& options) {
  require_square(g, "partial_fraction_expand");
  const PoleTable table = pole_table(g);
  if (!table.all_imaginary)
    throw std::domain_error("expansion requires purely imaginary poles: " + table.violation);
  if (!table.finite_pairs_all_rational())
    throw std::domain_error(
        "expansion requires rational omega^2 for every finite pole pair; an irreducible "
        "denominator factor (in u = s^2) has no rational root");
  for (const auto& rec : table.records)
    if (rec.kind == PoleRecord::Kind::kFinitePair && rec.order > 1)
      throw std::domain_error("higher-order finite imaginary pole at omega^2 = " +
                              to_string(*rec.omega_squared));

  SpectralData data = SpectralData::zero(g.rows());
  const ExtremeLimits lim = limits_at_extremes(g);  // throws past double poles
  data.s2_coeff = lim.s2_coeff;
  data.s_coeff = lim.s_coeff;
  data.inv_s_coeff = lim.inv_s_coeff;
  data.inv_s2_coeff = lim.inv_s2_coeff;
  data.value_at_inf = lim.value_at_inf;

  for (const auto& rec : table.records) {
    if (rec.kind != PoleRecord::Kind::kFinitePair) continue;
    SpectralMode mode;
    mode.omega_squared = *rec.omega_squared;
    mode.num_s = zero_mat(g.rows());
    mode.num_const = zero_mat(g.rows());
    for (Eigen::Index i = 0; i < g.rows(); ++i)
      for (Eigen::Index j = 0; j < g.cols(); ++j)
        mode_numerator(g(i, j), mode.omega_squared, mode.num_s(i, j), mode.num_const(i, j));
    mode.residue = residue_at(g, mode.omega_squared, options);
    data.modes.push_back(std::move(mode));
  }
  std::sort(data.modes.begin(), data.modes.end(),
            [](const SpectralMode& a, const SpectralMode& b) {
              return a.omega_squared < b.omega_squared;
            });

  if (!tm_equal(reconstruct(data), g))
    throw std::logic_error("partial-fraction expansion failed to reassemble its input");
  return data;
}

TransferMatrix reconstruct(const SpectralData& data) {
  const Eigen::Index m = data.m;
  const RationalFunction s = RationalFunction::variable();
  TransferMatrix g = tm_zero(m);
  g += tm_scaled(s * s, data.s2_coeff);
  g += tm_scaled(s, data.s_coeff);
  g += tm_constant(data.value_at_inf);
  g += tm_scaled(RationalFunction(Poly::one(), Poly::variable()), data.inv_s_coeff);
  g += tm_scaled(RationalFunction(Poly::one(), Poly::variable() * Poly::variable()),
                 data.inv_s2_coeff);
  for (const auto& mode : data.modes) {
    const Poly quad{mode.omega_squared, Rational(0), Rational(1)};
    g += tm_scaled(RationalFunction(Poly::variable(), quad), mode.num_s);
    g += tm_scaled(RationalFunction(Poly::one(), quad), mode.num_const);
  }
  return g;
}

TransferMatrix generate_lni(const GenerateSpec& spec) {
  if (spec.m < 1) throw std::invalid_argument("generate_lni: m must be positive");
  if (spec.num_modes < 0 || spec.zero_pole_order < 0 || spec.zero_pole_order > 2 ||
      spec.infinity_pole_order < 0 || spec.infinity_pole_order > 2)
    throw std::invalid_argument("generate_lni: malformed generator parameters");

  DeterministicRng rng(spec.seed);
  SpectralData data = SpectralData::zero(spec.m);

  std::vector<Rational> used;
  for (int k = 0; k < spec.num_modes; ++k) {
    Rational omega;
    for (;;) {
      omega = Rational(rng.below(1, 6), rng.below(1, 3));
      omega.canonicalize();
      bool fresh = true;
      for (const auto& u : used) fresh &= (u != omega);
      if (fresh) break;
    }
    used.push_back(omega);
    SpectralMode mode;
    mode.omega_squared = omega * omega;
    mode.num_s = zero_mat(spec.m);
    mode.num_const = random_psd(rng, spec.m);
    data.modes.push_back(std::move(mode));
  }
  std::sort(data.modes.begin(), data.modes.end(),
            [](const SpectralMode& a, const SpectralMode& b) {
              return a.omega_squared < b.omega_squared;
            });

  if (spec.zero_pole_order == 2) {
    data.inv_s2_coeff = random_psd(rng, spec.m);
    data.inv_s_coeff = random_skew(rng, spec.m);
  } else if (spec.zero_pole_order == 1) {
    data.inv_s_coeff = random_skew(rng, spec.m);
  }
  if (spec.infinity_pole_order == 2) {
    data.s2_coeff = -random_psd(rng, spec.m);
    data.s_coeff = random_skew(rng, spec.m);
  } else if (spec.infinity_pole_order == 1) {
    data.s_coeff = random_skew(rng, spec.m);
  }
  data.value_at_inf = random_symmetric(rng, spec.m);
  return reconstruct(data);
}

nlohmann::json spectral_to_json(const SpectralData& data) {
  nlohmann::json j;
  j["m"] = data.m;
  j["s2_coeff"] = mat_to_json(data.s2_coeff);
  j["s_coeff"] = mat_to_json(data.s_coeff);
  j["inv_s_coeff"] = mat_to_json(data.inv_s_coeff);
  j["inv_s2_coeff"] = mat_to_json(data.inv_s2_coeff);
  j["value_at_inf"] = mat_to_json(data.value_at_inf);
  nlohmann::json modes = nlohmann::json::array();
  for (const auto& mode : data.modes) {
    nlohmann::json mj;
    mj["omega_squared"] = to_string(mode.omega_squared);
    mj["num_s"] = mat_to_json(mode.num_s);
    mj["num_const"] = mat_to_json(mode.num_const);
    nlohmann::json rj;
    rj["exact"] = mode.residue.exact;
    if (mode.residue.exact) {
      rj["re"] = mat_to_json(mode.residue.value.re);
      rj["im"] = mat_to_json(mode.residue.value.im);
    } else {
      auto dump = [](const Eigen::MatrixXd& m) {
        nlohmann::json rows = nlohmann::json::array();
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
          nlohmann::json row = nlohmann::json::array();
          for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
          rows.push_back(std::move(row));
        }
        return rows;
      };
      rj["re_decimal"] = dump(mode.residue.value_re);
      rj["im_decimal"] = dump(mode.residue.value_im);
      rj["precision_bits"] = mode.residue.precision_bits;
      rj["hermitian_defect"] = mode.residue.hermitian_defect;
      rj["tolerance"] = mode.residue.tolerance;
    }
    mj["residue"] = std::move(rj);
    modes.push_back(std::move(mj));
  }
  j["modes"] = std::move(modes);
  return j;
}

}  // namespace lni
