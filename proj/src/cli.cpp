#include "lni/cli.hpp"

#include <ostream>
#include <sstream>

namespace lni {

namespace {

constexpr int kExitAffirmative = 0;
constexpr int kExitNegative = 1;
constexpr int kExitError = 2;

bool looks_like_transfer_matrix(const nlohmann::json& j) {
  return j.is_object() && j.contains("entries");
}

bool looks_like_state_space(const nlohmann::json& j) {
  return j.is_object() && j.contains("A") && j.contains("D");
}

// classify/pfe accept either input form; state-space input goes through the
// exact transfer-matrix recovery.
TransferMatrix transfer_input(const nlohmann::json& j) {
  if (looks_like_transfer_matrix(j)) return transfer_matrix_from_json(j);
  if (looks_like_state_space(j)) return transfer_of(state_space_from_json(j));
  throw std::invalid_argument(
      "input must be a transfer matrix ({\"m\", \"entries\"}) or a state space "
      "({\"A\", \"B\", \"C\", \"D\"})");
}

void emit(const nlohmann::json& payload, const CliOptions& options, std::ostream& out,
          const std::string& text_summary) {
  if (options.format == "json")
    out << payload.dump(2) << "\n";
  else
    out << text_summary;
}

std::string describe_conditions(const ClassificationReport& report) {
  std::ostringstream text;
  for (const auto& c : report.conditions) {
    text << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.id << ": " << c.citation << "\n";
    if (!c.pass && !c.witness.is_null()) text << "         witness: " << c.witness.dump() << "\n";
  }
  for (const auto& note : report.notes) text << "  note: " << note << "\n";
  return text.str();
}

int run_classify(const AnalysisRequest& request, std::ostream& out) {
  const TransferMatrix g = transfer_input(request.input);
  const bool lpr = request.options.target == "lpr";
  const ClassificationReport report = lpr ? is_lossless_pr(g) : is_lossless_ni(g);

  nlohmann::json payload = report.to_json();
  std::ostringstream text;
  text << "verdict: " << verdict_name(report.verdict) << " (" << report.exactness << ")\n"
       << describe_conditions(report);
  if (!request.options.grid.empty()) {
    const auto samples =
        ni_frequency_sample_check(g, request.options.grid, request.options.tolerance);
    nlohmann::json sj;
    sj["violation"] = samples.violation;
    sj["min_eigenvalue"] = samples.min_eigenvalue;
    sj["worst_omega"] = to_string(samples.worst_omega);
    sj["tolerance"] = request.options.tolerance;
    payload["frequency_samples"] = std::move(sj);
    text << "  sampled j[G(jw)-G*(jw)]: min eigenvalue " << samples.min_eigenvalue
         << " at omega = " << to_string(samples.worst_omega) << " (tolerance "
         << request.options.tolerance << ")\n";
  }
  emit(payload, request.options, out, text.str());
  return report.passed() ? kExitAffirmative : kExitNegative;
}

int run_pfe(const AnalysisRequest& request, std::ostream& out) {
  const TransferMatrix g = transfer_input(request.input);
  ResidueOptions opts;
  opts.tolerance = request.options.tolerance;
  const SpectralData data = partial_fraction_expand(g, opts);
  std::ostringstream text;
  text << "modes: " << data.modes.size() << "\n";
  for (const auto& mode : data.modes)
    text << "  omega^2 = " << to_string(mode.omega_squared)
         << (mode.residue.exact ? " (exact residue)" : " (numeric residue)") << "\n";
  text << "spectral data:\n" << spectral_to_json(data).dump(2) << "\n";
  emit(spectral_to_json(data), request.options, out, text.str());
  return kExitAffirmative;
}

int run_bridge(const AnalysisRequest& request, std::ostream& out) {
  const TransferMatrix g = transfer_input(request.input);
  std::vector<BridgeReport> reports;
  if (request.options.route == "zero")
    reports.push_back(classify_lni_via_bridge(g, BridgeRoute::kZero));
  else if (request.options.route == "infinity")
    reports.push_back(classify_lni_via_bridge(g, BridgeRoute::kInfinity));
  else if (request.options.route == "auto")
    reports = classify_lni_via_all_routes(g);
  else
    throw std::invalid_argument("route must be zero, infinity, or auto");
  if (reports.empty())
    throw std::invalid_argument(
        "no bridge route applies: the system has poles at both zero and infinity; use the "
        "direct classifier instead");

  nlohmann::json payload = nlohmann::json::array();
  std::ostringstream text;
  bool affirmative = true;
  for (const auto& r : reports) {
    payload.push_back(r.to_json());
    text << "route " << (r.route == BridgeRoute::kZero ? "zero" : "infinity")
         << ": verdict " << verdict_name(r.verdict)
         << (r.transform.anchor_symmetric ? "" : " (anchor not symmetric)") << "\n";
    affirmative &= r.verdict == Verdict::kLosslessNi;
  }
  emit(payload, request.options, out, text.str());
  return affirmative ? kExitAffirmative : kExitNegative;
}

int run_realize(const AnalysisRequest& request, std::ostream& out) {
  const TransferMatrix g = transfer_input(request.input);
  const auto [ss, meta] = realize(g);
  nlohmann::json payload = state_space_to_json(ss);
  payload["meta"] = nlohmann::json{{"n", meta.n},
                                   {"controllable", meta.controllable},
                                   {"observable", meta.observable},
                                   {"reduction_trace", meta.reduction_trace}};
  std::ostringstream text;
  text << "minimal realization with n = " << meta.n << " states (" << meta.reduction_trace
       << ")\n"
       << payload.dump(2) << "\n";
  emit(payload, request.options, out, text.str());
  return kExitAffirmative;
}

int run_certify(const AnalysisRequest& request, std::ostream& out) {
  StateSpace ss;
  std::string note;
  if (looks_like_state_space(request.input)) {
    ss = state_space_from_json(request.input);
  } else {
    ss = realize(transfer_input(request.input)).first;
    note = "input realized minimally before the certificate search";
  }
  SearchOptions opts;
  opts.tolerance = request.options.tolerance;
  const LemmaCheckResult result = lni_lemma_check(ss, opts);
  nlohmann::json payload = result.to_json();
  if (!note.empty()) payload["note"] = note;
  std::ostringstream text;
  text << (result.certified ? "LNI-certified" : "refuted") << "\n";
  if (result.certified) {
    text << "  P = " << mat_to_json(result.certificate->P).dump() << "\n"
         << "  provenance: " << result.certificate->provenance
         << (result.certificate->exact ? " (exact)" : " (numeric, tolerance-qualified)") << "\n";
    for (const auto& [name, value] : result.certificate->residuals)
      text << "  residual " << name << " = " << to_string(value) << "\n";
  } else {
    text << "  " << result.reason << "\n";
  }
  for (const auto& w : result.warnings) text << "  warning: " << w << "\n";
  emit(payload, request.options, out, text.str());
  return result.certified ? kExitAffirmative : kExitNegative;
}

int run_verify(const AnalysisRequest& request, std::ostream& out) {
  if (!request.input.is_object() || !request.input.contains("system") ||
      !request.input.contains("certificate"))
    throw std::invalid_argument(
        "verify expects {\"system\": <state space>, \"certificate\": {\"P\": ...}}");
  const StateSpace ss = state_space_from_json(request.input.at("system"));
  const Certificate cert = certificate_from_json(request.input.at("certificate"));
  const CertKind kind = cert_kind_from_string(request.options.kind);
  const WitnessReport report = verify_witness(ss, cert, kind, request.options.tolerance);
  std::ostringstream text;
  text << (report.pass ? "witness verified" : "witness rejected") << " for kind "
       << cert_kind_name(kind) << "\n";
  for (const auto& [name, value] : report.residuals)
    text << "  residual " << name << " = " << to_string(value) << "\n";
  text << "  P PSD: " << (report.p_psd ? "yes (exact LDL^T)" : "no") << "\n";
  emit(report.to_json(), request.options, out, text.str());
  return report.pass ? kExitAffirmative : kExitNegative;
}

int run_generate(const AnalysisRequest& request, std::ostream& out) {
  GenerateSpec spec;
  spec.m = request.options.gen_m;
  spec.num_modes = request.options.gen_modes;
  spec.zero_pole_order = request.options.gen_zero_order;
  spec.infinity_pole_order = request.options.gen_infinity_order;
  spec.seed = request.options.seed;
  const TransferMatrix g = generate_lni(spec);
  const nlohmann::json payload = transfer_matrix_to_json(g);
  emit(payload, request.options, out, payload.dump(2) + "\n");
  return kExitAffirmative;
}

}  // namespace

std::vector<Rational> parse_grid(const std::string& spec) {
  std::vector<Rational> grid;
  std::stringstream stream(spec);
  std::string token;
  while (std::getline(stream, token, ','))
    if (!token.empty()) grid.push_back(rational_from_string(token));
  return grid;
}

int run(const AnalysisRequest& request, std::ostream& out, std::ostream& err) {
  try {
    switch (request.command) {
      case Command::kClassify: return run_classify(request, out);
      case Command::kPfe: return run_pfe(request, out);
      case Command::kBridge: return run_bridge(request, out);
      case Command::kRealize: return run_realize(request, out);
      case Command::kCertify: return run_certify(request, out);
      case Command::kVerify: return run_verify(request, out);
      case Command::kGenerate: return run_generate(request, out);
    }
    err << "error: unknown command\n";
    return kExitError;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
}

}  // namespace lni
