#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lni/spectral.hpp"

namespace lni {

enum class Verdict {
  kLosslessNi,   // all conditions pass exactly
  kNiUndecided,  // not lossless NI; plain negative-imaginariness left open
  kNotNi,
  kLosslessPr,
  kPrUndecided,
  kNotPr,
};

std::string verdict_name(Verdict v);
/// Affirmative verdicts map to CLI exit code 0.
bool verdict_affirmative(Verdict v);

struct ConditionResult {
  std::string id;        // stable identifier, e.g. "ni.para-conjugate"
  std::string citation;  // the condition spelled out
  bool pass = false;
  nlohmann::json witness;  // concrete failure data (null when passing)
};

struct ClassificationReport {
  Verdict verdict = Verdict::kNotNi;
  std::vector<ConditionResult> conditions;
  std::string exactness = "exact";  // "tolerance-qualified" when a numeric path decided
  std::vector<std::string> notes;
  std::optional<SpectralData> spectral;

  bool passed() const { return verdict_affirmative(verdict); }
  const ConditionResult* find(const std::string& id) const;
  nlohmann::json to_json() const;
};

/// Lossless negative imaginary test: purely imaginary poles, structured
/// double poles at zero/infinity, simple finite pairs with Hermitian PSD
/// residues, and exact para-conjugate symmetry.
ClassificationReport is_lossless_ni(const TransferMatrix& g);

/// Lossless positive real test: exact para-skew identity plus simple
/// imaginary poles with PSD residues everywhere (zero and infinity included).
ClassificationReport is_lossless_pr(const TransferMatrix& f);

struct FrequencySample {
  Rational omega;
  double min_eigenvalue;
};

struct SampleCheckResult {
  bool violation = false;
  double min_eigenvalue = 0.0;  // smallest eigenvalue seen over the grid
  Rational worst_omega;
  std::vector<FrequencySample> samples;
};

/// Samples the Hermitian matrix j[G(jw) - G*(jw)] on a rational grid. Never
/// a proof; a clean pass only reports no violation on the sampled grid.
SampleCheckResult ni_frequency_sample_check(const TransferMatrix& g,
                                            const std::vector<Rational>& grid,
                                            double tolerance = 1e-9);

struct SumClosureReport {
  ClassificationReport first, second, sum;
};

/// Requires both summands lossless negative imaginary; classifies the sum.
SumClosureReport check_sum_closure(const TransferMatrix& g1, const TransferMatrix& g2);

struct DecompositionReport {
  bool lni = false;                        // verdict through the decomposition route
  std::optional<ClassificationReport> core;  // strictly proper middle part
  std::vector<ConditionResult> side_conditions;
  bool agrees_with_direct = false;
  nlohmann::json to_json() const;
};

/// Splits G into a strictly proper core plus the five extreme terms, checks
/// the side conditions, and cross-checks the verdict against the direct test.
DecompositionReport check_minor_decomposition(const TransferMatrix& g);

}  // namespace lni
