#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lni/classifier.hpp"
#include "lni/state_space.hpp"

namespace lni {

// Certificate families, named by the property they witness.
enum class CertKind {
  kPr,          // PA+A^TP = -LL^T, PB = C^T - LW, D+D^T = W^TW (verify only)
  kLosslessPr,  // PA+A^TP = 0, PB = C^T, D+D^T = 0
  kLosslessNi,  // PA+A^TP = 0, PB = A^TC^T, CB+(CB)^T = 0, D = D^T
};

CertKind cert_kind_from_string(const std::string& name);
std::string cert_kind_name(CertKind kind);

struct Certificate {
  MatQ P;                      // exact rational rendering (dyadic for numeric finds)
  std::optional<MatQ> L, W;    // kPr witnesses only
  bool exact = true;           // equalities and PSD-ness verified in exact arithmetic
  bool psd = false;
  double psd_margin = 0.0;     // numeric minimum-eigenvalue estimate
  std::string provenance;      // "exact-affine" | "numeric-search" | "user-supplied"
  std::vector<std::pair<std::string, Rational>> residuals;
  nlohmann::json to_json() const;
};

Certificate certificate_from_json(const nlohmann::json& j);

struct AffineFamily {
  Eigen::Index n = 0;
  MatQ particular;           // one symmetric solution of the equality blocks
  std::vector<MatQ> basis;   // symmetric directions spanning the solution set
};

struct FamilyResult {
  bool feasible = false;
  AffineFamily family;
  std::string infeasible_block;  // names the block that rules feasibility out
};

/// Exact affine solution set of the equality constraints in the unknown
/// symmetric P, after the constant blocks are checked.
FamilyResult solve_equality_family(const StateSpace& ss, CertKind kind);

struct SearchOptions {
  double tolerance = 1e-9;
  int max_iterations = 10000;
  long denominator_cap = 1000000;  // continued-fraction rationalization bound
};

struct PsdSearchResult {
  bool found = false;
  Certificate certificate;
  double best_margin = 0.0;
  int iterations = 0;
};

/// Maximizes the minimum eigenvalue over the affine family (concave) by
/// subgradient ascent from t = 0, then rationalizes and re-verifies exactly.
/// Exact LDL^T decides single-point families outright.
PsdSearchResult find_psd_point(const AffineFamily& family, const SearchOptions& options = {});

struct WitnessReport {
  std::vector<std::pair<std::string, Rational>> residuals;
  Rational max_residual;
  bool p_psd = false;
  bool pass = false;
  nlohmann::json to_json() const;
};

/// Exact residuals of every constraint block plus the PSD verdict on P.
/// Pass requires residuals within tolerance (zero by default) and P PSD.
WitnessReport verify_witness(const StateSpace& ss, const Certificate& cert, CertKind kind,
                             double tolerance = 0.0);

struct LemmaCheckResult {
  bool certified = false;
  std::optional<Certificate> certificate;
  std::string reason;                 // populated when refuted
  std::vector<std::string> warnings;  // e.g. observability relaxation
  Verdict classifier_verdict = Verdict::kNotNi;
  nlohmann::json to_json() const;
};

/// Full lossless-negative-imaginary state-space test: constant blocks,
/// equality family, PSD point, and a cross-check against the transfer-matrix
/// classifier (disagreement between exact routes is a logic error).
/// Requires (A, B) controllable; missing observability is only a warning.
LemmaCheckResult lni_lemma_check(const StateSpace& ss, const SearchOptions& options = {});

/// Continued-fraction rational approximation with bounded denominator.
Rational rationalize(double value, long denominator_cap);

}  // namespace lni
