#include "lni/classifier.hpp"

#include <Eigen/Eigenvalues>
#include <limits>
#include <stdexcept>

namespace lni {

namespace {

// Hermitian matrix j[G(jw) - G*(jw)] at a non-pole rational frequency: for
// G(jw) = X + jY this is -(Y + Y^T) + j(X - X^T), exactly.
ComplexMatQ ni_frequency_matrix(const TransferMatrix& g, const Rational& omega) {
  const ComplexMatQ v = evaluate(g, ComplexRational(Rational(0), omega));
  return {MatQ(-(v.im + v.im.transpose())), MatQ(v.re - v.re.transpose())};
}

double min_eigenvalue_hermitian(const ComplexMatQ& h) {
  const Eigen::Index n = h.rows();
  Eigen::MatrixXd embed(2 * n, 2 * n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      const double re = h.re(i, j).get_d(), im = h.im(i, j).get_d();
      embed(i, j) = re;
      embed(i + n, j + n) = re;
      embed(i, j + n) = -im;
      embed(i + n, j) = im;
    }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(embed);
  return eig.eigenvalues().minCoeff();
}

// K = beta/(2w) + j*alpha/2 is PSD iff [[beta, -alpha], [alpha, beta/r]] is
// (congruence of the real embedding scaled by 2w > 0), all rational.
bool residue_of_jg_psd(const MatQ& alpha, const MatQ& beta, const Rational& r) {
  const Eigen::Index n = alpha.rows();
  MatQ embed(2 * n, 2 * n);
  embed.topLeftCorner(n, n) = beta;
  embed.topRightCorner(n, n) = -alpha;
  embed.bottomLeftCorner(n, n) = alpha;
  embed.bottomRightCorner(n, n) = beta / r;
  return psd_check_exact(embed).psd;
}

// R = alpha/2 - j*beta/(2w) is PSD iff [[r*alpha, beta], [-beta, alpha]] is.
bool residue_of_f_psd(const MatQ& alpha, const MatQ& beta, const Rational& r) {
  const Eigen::Index n = alpha.rows();
  MatQ embed(2 * n, 2 * n);
  embed.topLeftCorner(n, n) = r * alpha;
  embed.topRightCorner(n, n) = beta;
  embed.bottomLeftCorner(n, n) = -beta;
  embed.bottomRightCorner(n, n) = alpha;
  return psd_check_exact(embed).psd;
}

nlohmann::json first_nonzero_entry_witness(const TransferMatrix& defect) {
  nlohmann::json w;
  for (Eigen::Index i = 0; i < defect.rows(); ++i)
    for (Eigen::Index j = 0; j < defect.cols(); ++j)
      if (!defect(i, j).is_zero()) {
        w["entry"] = {i, j};
        w["defect"] = defect(i, j).str();
        return w;
      }
  return w;
}

}  // namespace

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kLosslessNi: return "LNI";
    case Verdict::kNiUndecided: return "NI-only-undecided";
    case Verdict::kNotNi: return "not-NI";
    case Verdict::kLosslessPr: return "LPR";
    case Verdict::kPrUndecided: return "PR-undecided";
    case Verdict::kNotPr: return "not-PR";
  }
  return "?";
}

bool verdict_affirmative(Verdict v) {
  return v == Verdict::kLosslessNi || v == Verdict::kLosslessPr;
}

const ConditionResult* ClassificationReport::find(const std::string& id) const {
  for (const auto& c : conditions)
    if (c.id == id) return &c;
  return nullptr;
}

nlohmann::json ClassificationReport::to_json() const {
  nlohmann::json j;
  j["verdict"] = verdict_name(verdict);
  j["exactness"] = exactness;
  nlohmann::json conds = nlohmann::json::array();
  for (const auto& c : conditions) {
    nlohmann::json cj;
    cj["id"] = c.id;
    cj["citation"] = c.citation;
    cj["pass"] = c.pass;
    cj["witness"] = c.witness;
    conds.push_back(std::move(cj));
  }
  j["conditions"] = std::move(conds);
  j["notes"] = notes;
  if (spectral) j["spectral"] = spectral_to_json(*spectral);
  return j;
}

ClassificationReport is_lossless_ni(const TransferMatrix& g) {
  require_square(g, "is_lossless_ni");
  ClassificationReport report;
  bool definite_failure = false;  // refutes plain negative imaginariness too
  bool symmetry_failure = false;  // only the lossless identity failed
  bool undecided = false;

  auto add = [&](ConditionResult c) {
    if (!c.pass) c.witness["condition"] = c.id;
    report.conditions.push_back(std::move(c));
  };

  // Condition 1: pole locations; short-circuits the residue work.
  const PoleTable table = pole_table(g);
  {
    ConditionResult c{"ni.poles-imaginary",
                      "all poles of all entries lie on the imaginary axis",
                      table.all_imaginary,
                      nullptr};
    if (!table.all_imaginary) {
      c.witness = nlohmann::json{{"violation", table.violation},
                                 {"denominator_lcm", table.denominator_lcm.str()}};
      definite_failure = true;
    }
    add(std::move(c));
  }

  const int zero_order = table.denominator_lcm.order_at_zero();
  const int inf_order = infinity_pole_order(g);
  std::optional<ExtremeLimits> limits;
  if (zero_order <= 2 && inf_order <= 2) limits = limits_at_extremes(g);

  if (table.all_imaginary) {
    // Condition 2: pole structure at zero.
    ConditionResult c2{"ni.zero-pole",
                       "a pole at s = 0 is at most double and lim s^2 G(s) is symmetric "
                       "positive semidefinite",
                       true, nullptr};
    if (zero_order > 2) {
      c2.pass = false;
      c2.witness = nlohmann::json{{"zero_pole_order", zero_order}};
    } else if (limits) {
      const MatQ& c2m = limits->inv_s2_coeff;
      if (!is_symmetric(c2m)) {
        c2.pass = false;
        c2.witness = nlohmann::json{{"field", "inv_s2_coeff"},
                                    {"asymmetry_defect", mat_to_json(MatQ(c2m - c2m.transpose()))}};
      } else {
        const auto psd = psd_check_exact(c2m);
        if (!psd.psd) {
          c2.pass = false;
          c2.witness = nlohmann::json{
              {"inv_s2_coeff", mat_to_json(c2m)},
              {"negative_direction", mat_to_json(psd.witness)},
              {"quadratic_form_value", to_string(quadratic_form(c2m, psd.witness))}};
        }
      }
    }
    definite_failure |= !c2.pass;
    add(std::move(c2));

    // Condition 3: finite pole pairs simple with Hermitian PSD residues of jG.
    ConditionResult c3{"ni.residues-psd",
                       "every finite imaginary pole pair is simple and the residue of jG "
                       "there is Hermitian positive semidefinite",
                       true, nullptr};
    for (const auto& rec : table.records) {
      if (rec.kind != PoleRecord::Kind::kFinitePair) continue;
      if (rec.order > 1) {
        c3.pass = false;
        c3.witness = nlohmann::json{{"factor_u", rec.factor_u.str('u')},
                                    {"order", rec.order},
                                    {"detail", "finite imaginary pole pair is not simple"}};
        definite_failure = true;
        break;
      }
      if (!rec.omega_squared) {
        undecided = true;
        report.notes.push_back("finite pole pair with irrational omega^2 (factor " +
                               rec.factor_u.str('u') +
                               " in u = s^2): residue positivity not decided exactly");
        continue;
      }
      const Rational r = *rec.omega_squared;
      const ModeNumerator num = mode_numerator_at(g, r);
      const bool hermitian = is_symmetric(num.constant) && is_skew_symmetric(num.s_coeff);
      if (!hermitian) {
        c3.pass = false;
        c3.witness = nlohmann::json{
            {"omega_squared", to_string(r)},
            {"hermitian_defect_sym", mat_to_json(MatQ(num.constant - num.constant.transpose()))},
            {"hermitian_defect_skew", mat_to_json(MatQ(num.s_coeff + num.s_coeff.transpose()))}};
        definite_failure = true;
        break;
      }
      if (!residue_of_jg_psd(num.s_coeff, num.constant, r)) {
        c3.pass = false;
        c3.witness = nlohmann::json{{"omega_squared", to_string(r)},
                                    {"strength", mat_to_json(num.constant)},
                                    {"detail", "residue of jG is not positive semidefinite"}};
        definite_failure = true;
        break;
      }
    }
    add(std::move(c3));

    // Condition 4: pole structure at infinity.
    ConditionResult c4{"ni.infinity-pole",
                       "a pole at infinity is at most double and lim G(jw)/(jw)^2 is "
                       "symmetric negative semidefinite",
                       true, nullptr};
    if (inf_order > 2) {
      c4.pass = false;
      c4.witness = nlohmann::json{{"infinity_pole_order", inf_order},
                                  {"detail", "polynomial part has a nonzero s^" +
                                                 std::to_string(inf_order) + " coefficient"}};
    } else if (limits) {
      const MatQ& a2 = limits->s2_coeff;
      if (!is_symmetric(a2)) {
        c4.pass = false;
        c4.witness = nlohmann::json{{"field", "s2_coeff"},
                                    {"asymmetry_defect", mat_to_json(MatQ(a2 - a2.transpose()))}};
      } else {
        const auto psd = psd_check_exact(MatQ(-a2));
        if (!psd.psd) {
          c4.pass = false;
          c4.witness = nlohmann::json{{"s2_coeff", mat_to_json(a2)},
                                      {"positive_direction", mat_to_json(psd.witness)}};
        }
      }
    }
    definite_failure |= !c4.pass;
    add(std::move(c4));
  }

  // Condition 5: exact para-conjugate symmetry.
  {
    const TransferMatrix defect = g - para_conjugate(g);
    ConditionResult c5{"ni.para-conjugate", "G(s) equals G^T(-s) identically",
                       tm_is_zero(defect), nullptr};
    if (!c5.pass) {
      symmetry_failure = true;
      nlohmann::json w = first_nonzero_entry_witness(defect);
      if (limits) {
        const MatQ s_skew = limits->s_coeff + limits->s_coeff.transpose();
        const MatQ inv_skew = limits->inv_s_coeff + limits->inv_s_coeff.transpose();
        const MatQ d_sym = limits->value_at_inf - limits->value_at_inf.transpose();
        nlohmann::json diag;
        if (!is_zero(s_skew)) diag["s-coefficient-skewness"] = mat_to_json(s_skew);
        if (!is_zero(inv_skew)) diag["inv-s-coefficient-skewness"] = mat_to_json(inv_skew);
        if (!is_zero(d_sym)) diag["value-at-inf-symmetry"] = mat_to_json(d_sym);
        if (!diag.empty()) w["diagnostics"] = std::move(diag);
      }
      c5.witness = std::move(w);
    }
    add(std::move(c5));
  }

  if (definite_failure) {
    report.verdict = Verdict::kNotNi;
  } else if (undecided) {
    report.verdict = Verdict::kNiUndecided;
  } else if (symmetry_failure) {
    report.verdict = Verdict::kNiUndecided;
    report.notes.push_back(
        "the lossless identity G(s) = G^T(-s) fails; plain negative imaginariness is not "
        "decided by this exact test");
  } else {
    report.verdict = Verdict::kLosslessNi;
    report.spectral = partial_fraction_expand(g);
  }
  return report;
}

ClassificationReport is_lossless_pr(const TransferMatrix& f) {
  require_square(f, "is_lossless_pr");
  ClassificationReport report;
  report.notes.push_back(
      "analyticity in Re[s] > 0 is inferred from pole locations and the imaginary-axis "
      "structure of a para-skew rational matrix");
  bool not_pr = false;
  bool undecided = false;

  auto add = [&](ConditionResult c) {
    if (!c.pass) c.witness["condition"] = c.id;
    report.conditions.push_back(std::move(c));
  };

  const PoleTable table = pole_table(f);
  const int zero_order = table.denominator_lcm.order_at_zero();
  const int inf_order = infinity_pole_order(f);

  // Identity F + F^T(-s) = 0.
  bool skew_ok = false;
  {
    const TransferMatrix defect = f + para_conjugate(f);
    skew_ok = tm_is_zero(defect);
    ConditionResult c{"pr.para-skew", "F(s) + F^T(-s) vanishes identically", skew_ok, nullptr};
    if (!skew_ok) {
      nlohmann::json w = first_nonzero_entry_witness(defect);
      const auto entry = w.find("entry");
      if (entry != w.end()) {
        const Eigen::Index bi = (*entry)[0].get<Eigen::Index>();
        const Eigen::Index bj = (*entry)[1].get<Eigen::Index>();
        // Sample frequency where F(jw) + F*(jw) != 0, skipping poles and
        // incidental zeros of the defect entry.
        for (long k = 1; k <= 64; ++k) {
          const ComplexRational jw(Rational(0), Rational(k));
          if (defect(bi, bj).is_pole(jw)) continue;
          const ComplexRational val = defect(bi, bj).eval(jw);
          if (!val.is_zero()) {
            w["sample_omega"] = to_string(Rational(k));
            w["sample_value"] = {{"re", to_string(val.re)}, {"im", to_string(val.im)}};
            break;
          }
        }
      }
      c.witness = std::move(w);
    }
    add(std::move(c));
  }

  // Pole locations.
  {
    ConditionResult c{"pr.poles-imaginary", "all poles lie on the imaginary axis",
                      table.all_imaginary, nullptr};
    if (!table.all_imaginary) {
      c.witness = nlohmann::json{{"violation", table.violation}};
      // Para-skewness mirrors every pole across the imaginary axis, so an
      // off-axis pole puts one in the open right half plane.
      if (skew_ok) {
        not_pr = true;
        c.witness["detail"] = "off-axis pole mirrored into Re[s] > 0 by the para-skew identity";
      } else {
        // An exact positive real root of the denominator refutes analyticity.
        Poly squarefree = Poly::one();
        for (const auto& [factor, mult] : squarefree_decomposition(table.denominator_lcm))
          squarefree = squarefree * factor;
        if (squarefree.degree() > 0 &&
            count_real_roots_in(squarefree, RationalInterval{Rational(0), std::nullopt}) > 0) {
          not_pr = true;
          c.witness["detail"] = "denominator has a real root in Re[s] > 0";
        }
      }
    }
    add(std::move(c));
  }

  if (table.all_imaginary) {
    // Simplicity everywhere.
    {
      ConditionResult c{"pr.poles-simple",
                        "every pole, including s = 0 and s = infinity, is simple", true, nullptr};
      if (zero_order > 1) {
        c.pass = false;
        c.witness = nlohmann::json{{"pole", "zero"}, {"order", zero_order}};
      } else if (inf_order > 1) {
        c.pass = false;
        c.witness = nlohmann::json{{"pole", "infinity"}, {"order", inf_order}};
      } else {
        for (const auto& rec : table.records)
          if (rec.kind == PoleRecord::Kind::kFinitePair && rec.order > 1) {
            c.pass = false;
            c.witness = nlohmann::json{{"pole_factor_u", rec.factor_u.str('u')},
                                       {"order", rec.order}};
            break;
          }
      }
      not_pr |= !c.pass;
      add(std::move(c));
    }

    // Residues at finite pairs.
    {
      ConditionResult c{"pr.residues-psd",
                        "every finite imaginary pole pair has a Hermitian positive "
                        "semidefinite residue",
                        true, nullptr};
      for (const auto& rec : table.records) {
        if (rec.kind != PoleRecord::Kind::kFinitePair || rec.order > 1) continue;
        if (!rec.omega_squared) {
          undecided = true;
          report.notes.push_back(
              "finite pole pair with irrational omega^2: residue positivity not decided "
              "exactly");
          continue;
        }
        const Rational r = *rec.omega_squared;
        // Mode numerator (alpha s + beta)/(s^2 + r) of F: the residue is
        // R = alpha/2 - j beta/(2w), Hermitian iff alpha symmetric and beta
        // skew.
        const ModeNumerator num = mode_numerator_at(f, r);
        const bool hermitian = is_symmetric(num.s_coeff) && is_skew_symmetric(num.constant);
        if (!hermitian) {
          c.pass = false;
          c.witness = nlohmann::json{{"omega_squared", to_string(r)},
                                     {"detail", "residue is not Hermitian"}};
          not_pr = true;
          break;
        }
        if (!residue_of_f_psd(num.s_coeff, num.constant, r)) {
          c.pass = false;
          c.witness = nlohmann::json{{"omega_squared", to_string(r)},
                                     {"detail", "residue is not positive semidefinite"}};
          not_pr = true;
          break;
        }
      }
      add(std::move(c));
    }

    // Residues at zero and infinity.
    if (zero_order <= 1 && inf_order <= 1) {
      const ExtremeLimits lim = limits_at_extremes(f);
      {
        ConditionResult c{"pr.residue-at-zero",
                          "the residue at s = 0 is symmetric positive semidefinite", true,
                          nullptr};
        const MatQ& r0 = lim.inv_s_coeff;
        if (!is_symmetric(r0)) {
          c.pass = false;
          c.witness = nlohmann::json{{"asymmetry_defect", mat_to_json(MatQ(r0 - r0.transpose()))}};
        } else if (!psd_check_exact(r0).psd) {
          c.pass = false;
          c.witness = nlohmann::json{{"residue_at_zero", mat_to_json(r0)}};
        }
        not_pr |= !c.pass;
        add(std::move(c));
      }
      {
        ConditionResult c{"pr.residue-at-infinity",
                          "the coefficient of s in the polynomial part is symmetric positive "
                          "semidefinite",
                          true, nullptr};
        const MatQ& rinf = lim.s_coeff;
        if (!is_symmetric(rinf)) {
          c.pass = false;
          c.witness = nlohmann::json{{"asymmetry_defect",
                                      mat_to_json(MatQ(rinf - rinf.transpose()))}};
        } else if (!psd_check_exact(rinf).psd) {
          c.pass = false;
          c.witness = nlohmann::json{{"s_coefficient", mat_to_json(rinf)}};
        }
        not_pr |= !c.pass;
        add(std::move(c));
      }
    }
  }

  bool all_pass = true;
  for (const auto& c : report.conditions) all_pass &= c.pass;
  if (all_pass && !undecided)
    report.verdict = Verdict::kLosslessPr;
  else if (not_pr)
    report.verdict = Verdict::kNotPr;
  else
    report.verdict = Verdict::kPrUndecided;
  return report;
}

SampleCheckResult ni_frequency_sample_check(const TransferMatrix& g,
                                            const std::vector<Rational>& grid,
                                            double tolerance) {
  require_square(g, "ni_frequency_sample_check");
  if (grid.empty()) throw std::invalid_argument("sampling grid is empty");
  SampleCheckResult result;
  result.min_eigenvalue = std::numeric_limits<double>::infinity();
  const Poly lcm = denominator_lcm(g);
  for (const Rational& omega : grid) {
    if (omega <= 0) throw std::invalid_argument("sampling grid must be positive");
    if (lcm.eval(ComplexRational(Rational(0), omega)).is_zero())
      throw std::invalid_argument("sampling grid hits a pole at omega = " + to_string(omega));
    const double lambda = min_eigenvalue_hermitian(ni_frequency_matrix(g, omega));
    result.samples.push_back({omega, lambda});
    if (lambda < result.min_eigenvalue) {
      result.min_eigenvalue = lambda;
      result.worst_omega = omega;
    }
  }
  result.violation = result.min_eigenvalue < -tolerance;
  return result;
}

SumClosureReport check_sum_closure(const TransferMatrix& g1, const TransferMatrix& g2) {
  if (g1.rows() != g2.rows() || g1.cols() != g2.cols())
    throw std::invalid_argument("check_sum_closure: dimension mismatch");
  SumClosureReport report;
  report.first = is_lossless_ni(g1);
  report.second = is_lossless_ni(g2);
  if (!report.first.passed() || !report.second.passed())
    throw std::invalid_argument(
        "check_sum_closure requires both summands lossless negative imaginary");
  report.sum = is_lossless_ni(TransferMatrix(g1 + g2));
  if (!report.sum.passed())
    throw std::logic_error("sum of lossless negative imaginary systems failed to classify");
  return report;
}

nlohmann::json DecompositionReport::to_json() const {
  nlohmann::json j;
  j["lni"] = lni;
  j["agrees_with_direct"] = agrees_with_direct;
  if (core) j["core"] = core->to_json();
  nlohmann::json conds = nlohmann::json::array();
  for (const auto& c : side_conditions) {
    nlohmann::json cj;
    cj["id"] = c.id;
    cj["citation"] = c.citation;
    cj["pass"] = c.pass;
    cj["witness"] = c.witness;
    conds.push_back(std::move(cj));
  }
  j["side_conditions"] = std::move(conds);
  return j;
}

DecompositionReport check_minor_decomposition(const TransferMatrix& g) {
  require_square(g, "check_minor_decomposition");
  DecompositionReport report;
  const int inf_order = infinity_pole_order(g);
  const int zero_order = zero_pole_order(g);

  if (inf_order > 2) {
    report.side_conditions.push_back(
        {"decomp.polynomial-part-quadratic",
         "the polynomial part stops at s^2 (all higher coefficients vanish)", false,
         nlohmann::json{{"infinity_pole_order", inf_order}}});
    report.lni = false;
  } else if (zero_order > 2) {
    report.side_conditions.push_back(
        {"decomp.zero-pole-order", "the pole at s = 0 is at most double", false,
         nlohmann::json{{"zero_pole_order", zero_order}}});
    report.lni = false;
  } else {
    const ExtremeLimits lim = limits_at_extremes(g);
    SpectralData extremes = SpectralData::zero(g.rows());
    extremes.s2_coeff = lim.s2_coeff;
    extremes.s_coeff = lim.s_coeff;
    extremes.inv_s_coeff = lim.inv_s_coeff;
    extremes.inv_s2_coeff = lim.inv_s2_coeff;
    extremes.value_at_inf = lim.value_at_inf;
    const TransferMatrix core_tm = g - reconstruct(extremes);
    // The subtraction must leave a strictly proper matrix with no pole at 0.
    for (Eigen::Index i = 0; i < core_tm.rows(); ++i)
      for (Eigen::Index j = 0; j < core_tm.cols(); ++j)
        if (!core_tm(i, j).is_zero() &&
            core_tm(i, j).num().degree() >= core_tm(i, j).den().degree())
          throw std::logic_error("decomposition core is not strictly proper");
    if (zero_pole_order(core_tm) != 0)
      throw std::logic_error("decomposition core retains a pole at zero");

    report.core = is_lossless_ni(core_tm);

    auto side = [&](const char* id, const char* citation, bool pass, nlohmann::json witness) {
      report.side_conditions.push_back({id, citation, pass, std::move(witness)});
    };
    const bool s2_nsd =
        is_symmetric(lim.s2_coeff) && psd_check_exact(MatQ(-lim.s2_coeff)).psd;
    side("decomp.s2-nsd", "the s^2 coefficient is symmetric negative semidefinite", s2_nsd,
         s2_nsd ? nlohmann::json() : nlohmann::json{{"s2_coeff", mat_to_json(lim.s2_coeff)}});
    const bool c2_psd =
        is_symmetric(lim.inv_s2_coeff) && psd_check_exact(lim.inv_s2_coeff).psd;
    side("decomp.inv-s2-psd", "the 1/s^2 coefficient is symmetric positive semidefinite",
         c2_psd,
         c2_psd ? nlohmann::json() : nlohmann::json{{"inv_s2_coeff", mat_to_json(lim.inv_s2_coeff)}});
    const bool s_skew = is_skew_symmetric(lim.s_coeff);
    side("decomp.s-skew", "the s coefficient plus its transpose vanishes", s_skew,
         s_skew ? nlohmann::json()
                : nlohmann::json{{"skew_defect",
                                  mat_to_json(MatQ(lim.s_coeff + lim.s_coeff.transpose()))}});
    const bool inv_skew = is_skew_symmetric(lim.inv_s_coeff);
    side("decomp.inv-s-skew", "the 1/s coefficient plus its transpose vanishes", inv_skew,
         inv_skew ? nlohmann::json()
                  : nlohmann::json{{"skew_defect", mat_to_json(MatQ(
                                                       lim.inv_s_coeff +
                                                       lim.inv_s_coeff.transpose()))}});
    const bool d_sym = is_symmetric(lim.value_at_inf);
    side("decomp.value-at-inf-symmetric", "the value at infinity is symmetric", d_sym,
         d_sym ? nlohmann::json()
               : nlohmann::json{{"symmetry_defect",
                                 mat_to_json(MatQ(lim.value_at_inf -
                                                  lim.value_at_inf.transpose()))}});

    bool sides = true;
    for (const auto& c : report.side_conditions) sides &= c.pass;
    report.lni = sides && report.core->passed();
  }

  const ClassificationReport direct = is_lossless_ni(g);
  report.agrees_with_direct = (report.lni == direct.passed());
  const bool any_undecided = direct.verdict == Verdict::kNiUndecided ||
                             (report.core && report.core->verdict == Verdict::kNiUndecided);
  if (!report.agrees_with_direct && !any_undecided)
    throw std::logic_error("decomposition route disagrees with the direct lossless test");
  return report;
}

}  // namespace lni
