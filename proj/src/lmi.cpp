#include "lni/lmi.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace lni {

namespace {

Eigen::Index sym_index(Eigen::Index i, Eigen::Index j, Eigen::Index n) {
  if (i > j) std::swap(i, j);
  // row-major upper triangle offset
  return i * n - i * (i - 1) / 2 + (j - i);
}

MatQ unpack_symmetric(const VecQ& vars, Eigen::Index n) {
  MatQ p(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i; j < n; ++j) {
      p(i, j) = vars(sym_index(i, j, n));
      p(j, i) = p(i, j);
    }
  return p;
}

Eigen::MatrixXd to_double(const MatQ& m) {
  Eigen::MatrixXd d(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) d(i, j) = m(i, j).get_d();
  return d;
}

double min_eigenvalue(const Eigen::MatrixXd& sym) {
  if (sym.rows() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(sym);
  return eig.eigenvalues().minCoeff();
}

// Exact dyadic rational from a double (doubles are rationals).
Rational exact_from_double(double value) {
  if (!std::isfinite(value)) throw std::domain_error("non-finite value in certificate");
  Rational r;
  mpq_set_d(r.get_mpq_t(), value);
  return r;
}

MatQ exact_from_double_matrix(const Eigen::MatrixXd& m) {
  MatQ q(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) q(i, j) = exact_from_double(m(i, j));
  return q;
}

}  // namespace

CertKind cert_kind_from_string(const std::string& name) {
  if (name == "pr") return CertKind::kPr;
  if (name == "lossless-pr") return CertKind::kLosslessPr;
  if (name == "lossless-ni") return CertKind::kLosslessNi;
  throw std::invalid_argument("unknown certificate kind: " + name +
                              " (expected pr, lossless-pr, or lossless-ni)");
}

std::string cert_kind_name(CertKind kind) {
  switch (kind) {
    case CertKind::kPr: return "pr";
    case CertKind::kLosslessPr: return "lossless-pr";
    case CertKind::kLosslessNi: return "lossless-ni";
  }
  return "?";
}

nlohmann::json Certificate::to_json() const {
  nlohmann::json j;
  j["P"] = mat_to_json(P);
  if (L) j["L"] = mat_to_json(*L);
  if (W) j["W"] = mat_to_json(*W);
  j["exact"] = exact;
  j["provenance"] = provenance;
  nlohmann::json res;
  for (const auto& [name, value] : residuals) res[name] = to_string(value);
  j["residuals"] = std::move(res);
  j["psd"] = nlohmann::json{{"verdict", psd}, {"margin_estimate", psd_margin}};
  return j;
}

Certificate certificate_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("P"))
    throw std::invalid_argument("certificate JSON requires a \"P\" matrix");
  Certificate cert;
  cert.P = mat_from_json(j.at("P"));
  if (j.contains("L")) cert.L = mat_from_json(j.at("L"));
  if (j.contains("W")) cert.W = mat_from_json(j.at("W"));
  cert.provenance = "user-supplied";
  return cert;
}

FamilyResult solve_equality_family(const StateSpace& ss, CertKind kind) {
  ss.validate();
  if (kind == CertKind::kPr)
    throw std::invalid_argument(
        "the pr certificate family is bilinear in L; only witness verification is offered");
  const Eigen::Index n = ss.n(), m = ss.m();
  FamilyResult out;

  // Constant blocks first: they decide feasibility before P enters.
  if (kind == CertKind::kLosslessPr) {
    if (!is_zero(MatQ(ss.D + ss.D.transpose()))) {
      out.infeasible_block = "D + D^T";
      return out;
    }
  } else {
    if (!is_symmetric(ss.D)) {
      out.infeasible_block = "D - D^T";
      return out;
    }
    const MatQ cb = ss.C * ss.B;
    if (!is_zero(MatQ(cb + cb.transpose()))) {
      out.infeasible_block = "CB + (CB)^T";
      return out;
    }
  }

  const Eigen::Index num_vars = n * (n + 1) / 2;
  const Eigen::Index num_rows = n * (n + 1) / 2 + n * m;
  MatQ system = MatQ::Zero(num_rows, num_vars);
  VecQ rhs = VecQ::Zero(num_rows);

  // PA + A^TP = 0, upper triangle.
  Eigen::Index row = 0;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i; j < n; ++j, ++row)
      for (Eigen::Index k = 0; k < n; ++k) {
        system(row, sym_index(i, k, n)) += ss.A(k, j);  // (PA)_ij
        system(row, sym_index(k, j, n)) += ss.A(k, i);  // (A^TP)_ij
      }

  // PB = C^T (lossless-pr) or PB = A^TC^T (lossless-ni).
  const MatQ target = kind == CertKind::kLosslessPr ? MatQ(ss.C.transpose())
                                                    : MatQ(ss.A.transpose() * ss.C.transpose());
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < m; ++j, ++row) {
      for (Eigen::Index k = 0; k < n; ++k) system(row, sym_index(i, k, n)) += ss.B(k, j);
      rhs(row) = target(i, j);
    }

  const LinearSolution sol = solve_linear(system, rhs);
  if (!sol.consistent) {
    out.infeasible_block =
        kind == CertKind::kLosslessPr ? "PA+A^TP = 0, PB = C^T" : "PA+A^TP = 0, PB = A^TC^T";
    return out;
  }
  // With (A, B) controllable the family is a single point: PA = -A^TP forces
  // P A^k B = (-A^T)^k (PB), so P is pinned on the whole reachable space.
  out.feasible = true;
  out.family.n = n;
  out.family.particular = unpack_symmetric(sol.particular, n);
  for (const auto& k : sol.kernel) out.family.basis.push_back(unpack_symmetric(k, n));
  return out;
}

Rational rationalize(double value, long denominator_cap) {
  if (!std::isfinite(value)) throw std::domain_error("cannot rationalize a non-finite value");
  const bool negative = value < 0;
  double x = std::abs(value);
  // continued-fraction convergents p/q with q bounded
  long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  for (int iter = 0; iter < 64; ++iter) {
    const double fl = std::floor(x);
    if (fl > 9e17) break;
    const long a = static_cast<long>(fl);
    if (q0 + a * q1 > denominator_cap && q1 > 0) break;
    const long p2 = a * p1 + p0, q2 = a * q1 + q0;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    if (q1 > denominator_cap) break;
    const double frac = x - fl;
    if (frac < 1e-15) break;
    x = 1.0 / frac;
  }
  if (q1 == 0 || q1 > denominator_cap) {
    p1 = p0;
    q1 = q0;
  }
  if (q1 == 0) return Rational(0);
  Rational r(p1, q1);
  r.canonicalize();
  return negative ? Rational(-r) : r;
}

PsdSearchResult find_psd_point(const AffineFamily& family, const SearchOptions& options) {
  PsdSearchResult result;

  auto finish_exact = [&](const MatQ& p, const char* provenance) {
    result.found = true;
    result.certificate.P = p;
    result.certificate.exact = true;
    result.certificate.psd = true;
    result.certificate.psd_margin = min_eigenvalue(to_double(p));
    result.certificate.provenance = provenance;
    // best_margin keeps the largest minimum eigenvalue seen anywhere; the
    // returned P may deliberately sit on the cone boundary.
    result.best_margin = std::max(result.best_margin, result.certificate.psd_margin);
  };

  // Deterministic start t = 0: the particular solution, decided exactly.
  if (psd_check_exact(family.particular).psd) {
    finish_exact(family.particular, "exact-affine");
    return result;
  }
  result.best_margin = min_eigenvalue(to_double(family.particular));
  if (family.basis.empty()) return result;  // single point, refuted exactly

  // Subgradient ascent on the concave map t -> lambda_min(P0 + sum t_k N_k).
  const std::size_t dims = family.basis.size();
  const Eigen::MatrixXd p0 = to_double(family.particular);
  std::vector<Eigen::MatrixXd> dirs;
  dirs.reserve(dims);
  for (const auto& b : family.basis) dirs.push_back(to_double(b));

  Eigen::VectorXd t = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(dims));
  auto assemble = [&](const Eigen::VectorXd& tv) {
    Eigen::MatrixXd p = p0;
    for (std::size_t k = 0; k < dims; ++k) p += tv(static_cast<Eigen::Index>(k)) * dirs[k];
    return p;
  };
  auto lambda_and_vec = [&](const Eigen::VectorXd& tv, Eigen::VectorXd& vec) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(assemble(tv));
    vec = eig.eigenvectors().col(0);
    return eig.eigenvalues()(0);
  };

  Eigen::VectorXd v;
  double lambda = lambda_and_vec(t, v);
  Eigen::VectorXd best_t = t;
  double best_lambda = lambda;
  double step = 1.0;
  int iter = 0;
  for (; iter < options.max_iterations && step > 1e-14; ++iter) {
    Eigen::VectorXd grad(static_cast<Eigen::Index>(dims));
    for (std::size_t k = 0; k < dims; ++k)
      grad(static_cast<Eigen::Index>(k)) = v.dot(dirs[k] * v);
    const double norm = grad.norm();
    if (norm < 1e-15) break;  // flat: lambda_min stationary in every direction
    const Eigen::VectorXd trial = t + (step / norm) * grad;
    Eigen::VectorXd trial_vec;
    const double trial_lambda = lambda_and_vec(trial, trial_vec);
    if (trial_lambda > lambda) {
      t = trial;
      v = trial_vec;
      lambda = trial_lambda;
      if (lambda > best_lambda) {
        best_lambda = lambda;
        best_t = t;
      }
      step *= 1.5;
      if (lambda > 1.0) break;  // comfortably interior
    } else {
      step *= 0.5;
    }
  }
  result.iterations = iter;
  result.best_margin = best_lambda;

  // Rationalize t and re-verify exactly, preferring small denominators.
  for (long cap : {1L, 2L, 3L, 4L, 6L, 8L, 12L, 16L, 24L, 48L, 120L, 1000L,
                   options.denominator_cap}) {
    VecQ t_rat(static_cast<Eigen::Index>(dims));
    for (std::size_t k = 0; k < dims; ++k)
      t_rat(static_cast<Eigen::Index>(k)) = rationalize(best_t(static_cast<Eigen::Index>(k)), cap);
    MatQ candidate = family.particular;
    for (std::size_t k = 0; k < dims; ++k)
      candidate += t_rat(static_cast<Eigen::Index>(k)) * family.basis[k];
    if (psd_check_exact(candidate).psd) {
      finish_exact(candidate, "numeric-search");
      result.iterations = iter;
      return result;
    }
  }

  // No exact point recovered; disclose the numeric certificate if acceptable.
  if (best_lambda >= -options.tolerance) {
    result.found = true;
    result.certificate.P = exact_from_double_matrix(assemble(best_t));
    // Symmetrize the dyadic rendering.
    result.certificate.P = (result.certificate.P + MatQ(result.certificate.P.transpose())) / Rational(2);
    result.certificate.exact = false;
    result.certificate.psd = best_lambda >= -options.tolerance;
    result.certificate.psd_margin = best_lambda;
    result.certificate.provenance = "numeric-search";
  }

  return result;
}

nlohmann::json WitnessReport::to_json() const {
  nlohmann::json j;
  nlohmann::json res;
  for (const auto& [name, value] : residuals) res[name] = to_string(value);
  j["residuals"] = std::move(res);
  j["max_residual"] = to_string(max_residual);
  j["p_psd"] = p_psd;
  j["pass"] = pass;
  return j;
}

WitnessReport verify_witness(const StateSpace& ss, const Certificate& cert, CertKind kind,
                             double tolerance) {
  ss.validate();
  const Eigen::Index n = ss.n(), m = ss.m();
  if (cert.P.rows() != n || cert.P.cols() != n)
    throw std::invalid_argument("certificate P must be n x n");

  WitnessReport report;
  auto block = [&](const std::string& name, const MatQ& value) {
    report.residuals.emplace_back(name, max_abs_entry(value));
  };

  block("P - P^T", cert.P - MatQ(cert.P.transpose()));
  block("PA + A^TP", kind == CertKind::kPr
                         ? MatQ(cert.P * ss.A + ss.A.transpose() * cert.P +
                                (cert.L ? MatQ(*cert.L * cert.L->transpose())
                                        : MatQ(MatQ::Zero(n, n))))
                         : MatQ(cert.P * ss.A + ss.A.transpose() * cert.P));
  switch (kind) {
    case CertKind::kPr: {
      const MatQ l = cert.L ? *cert.L : MatQ(MatQ::Zero(n, 0));
      const MatQ w = cert.W ? *cert.W : MatQ(MatQ::Zero(l.cols(), m));
      if (l.cols() != w.rows())
        throw std::invalid_argument("certificate L and W have mismatched inner dimension");
      block("PB - C^T + LW", cert.P * ss.B - ss.C.transpose() + l * w);
      block("D + D^T - W^TW", ss.D + ss.D.transpose() - w.transpose() * w);
      break;
    }
    case CertKind::kLosslessPr:
      block("PB - C^T", cert.P * ss.B - ss.C.transpose());
      block("D + D^T", ss.D + ss.D.transpose());
      break;
    case CertKind::kLosslessNi: {
      block("PB - A^TC^T", cert.P * ss.B - ss.A.transpose() * ss.C.transpose());
      const MatQ cb = ss.C * ss.B;
      block("CB + (CB)^T", cb + cb.transpose());
      block("D - D^T", ss.D - ss.D.transpose());
      break;
    }
  }

  report.max_residual = 0;
  for (const auto& [name, value] : report.residuals)
    if (value > report.max_residual) report.max_residual = value;

  const MatQ p_sym = (cert.P + MatQ(cert.P.transpose())) / Rational(2);
  report.p_psd = psd_check_exact(p_sym).psd;
  const Rational tol = tolerance > 0 ? exact_from_double(tolerance) : Rational(0);
  report.pass = report.p_psd && report.max_residual <= tol;
  return report;
}

nlohmann::json LemmaCheckResult::to_json() const {
  nlohmann::json j;
  j["certified"] = certified;
  if (certificate) j["certificate"] = certificate->to_json();
  if (!reason.empty()) j["reason"] = reason;
  j["warnings"] = warnings;
  j["classifier_verdict"] = verdict_name(classifier_verdict);
  return j;
}

LemmaCheckResult lni_lemma_check(const StateSpace& ss, const SearchOptions& options) {
  ss.validate();
  LemmaCheckResult result;
  const auto [rank_c, rank_o] = ctrb_obsv_ranks(ss);
  if (rank_c < ss.n())
    throw std::invalid_argument("lni_lemma_check requires a completely controllable pair (A, B)");
  if (rank_o < ss.n())
    result.warnings.push_back(
        "the pair (A, C) is not observable; the certificate test remains valid without "
        "observability, but the solution family may be unbounded");

  const FamilyResult family = solve_equality_family(ss, CertKind::kLosslessNi);
  if (!family.feasible) {
    result.certified = false;
    result.reason = "equality certificate is infeasible in block " + family.infeasible_block;
  } else {
    PsdSearchResult search = find_psd_point(family.family, options);
    if (search.found) {
      result.certified = true;
      result.certificate = std::move(search.certificate);
      // Attach the exact residual blocks.
      const WitnessReport check =
          verify_witness(ss, *result.certificate, CertKind::kLosslessNi,
                         result.certificate->exact ? 0.0 : options.tolerance);
      result.certificate->residuals = check.residuals;
      if (result.certificate->exact && !check.pass)
        throw std::logic_error("exact certificate failed its own verification");
    } else {
      result.certified = false;
      std::ostringstream reason;
      reason << "no positive semidefinite point found in the certificate family (best margin "
             << search.best_margin << ")";
      result.reason = reason.str();
    }
  }

  const ClassificationReport classifier = is_lossless_ni(transfer_of(ss));
  result.classifier_verdict = classifier.verdict;
  bool exact_classifier = true;  // kNiUndecided from irrational frequencies is inconclusive
  for (const auto& note : classifier.notes)
    if (note.find("irrational") != std::string::npos) exact_classifier = false;
  if (!result.certified && classifier.verdict == Verdict::kLosslessNi)
    throw std::logic_error(
        "state-space certificate and transfer-matrix classifier disagree; internal error");
  if (result.certified && classifier.verdict != Verdict::kLosslessNi && exact_classifier)
    throw std::logic_error(
        "state-space certificate and transfer-matrix classifier disagree; internal error");
  return result;
}

}  // namespace lni
