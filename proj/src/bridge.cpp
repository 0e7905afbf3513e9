#include "lni/bridge.hpp"

#include <stdexcept>

namespace lni {

namespace {

MatQ value_at_zero(const TransferMatrix& g) {
  const ComplexMatQ v = evaluate(g, ComplexRational());
  return v.re;  // imaginary part of a real-rational matrix at s = 0 vanishes
}

MatQ value_at_infinity(const TransferMatrix& g) {
  MatQ d(g.rows(), g.cols());
  for (Eigen::Index i = 0; i < g.rows(); ++i)
    for (Eigen::Index j = 0; j < g.cols(); ++j) d(i, j) = g(i, j).value_at_infinity();
  return d;
}

}  // namespace

BridgeResult to_lpr_via_zero(const TransferMatrix& g) {
  require_square(g, "to_lpr_via_zero");
  if (zero_pole_order(g) > 0)
    throw std::invalid_argument("to_lpr_via_zero requires no poles at s = 0");
  BridgeResult out;
  out.anchor = value_at_zero(g);
  out.anchor_symmetric = is_symmetric(out.anchor);
  const RationalFunction s = RationalFunction::variable();
  out.f = TransferMatrix(g.rows(), g.cols());
  for (Eigen::Index i = 0; i < g.rows(); ++i)
    for (Eigen::Index j = 0; j < g.cols(); ++j) {
      const RationalFunction shifted = g(i, j) - RationalFunction(out.anchor(i, j));
      // shifted(0) = 0, so the numerator carries a factor of s exactly.
      if (!shifted.is_zero() && shifted.num().order_at_zero() == 0)
        throw std::logic_error("zero-route cancellation failed");
      out.f(i, j) = -(shifted / s);
    }
  return out;
}

BridgeResult to_lpr_via_infinity(const TransferMatrix& g) {
  require_square(g, "to_lpr_via_infinity");
  if (!is_proper(g))
    throw std::invalid_argument("to_lpr_via_infinity requires a proper transfer matrix");
  BridgeResult out;
  out.anchor = value_at_infinity(g);
  out.anchor_symmetric = is_symmetric(out.anchor);
  const RationalFunction s = RationalFunction::variable();
  out.f = TransferMatrix(g.rows(), g.cols());
  for (Eigen::Index i = 0; i < g.rows(); ++i)
    for (Eigen::Index j = 0; j < g.cols(); ++j)
      out.f(i, j) = s * (g(i, j) - RationalFunction(out.anchor(i, j)));
  return out;
}

nlohmann::json BridgeReport::to_json() const {
  nlohmann::json j;
  j["route"] = route == BridgeRoute::kZero ? "zero" : "infinity";
  j["verdict"] = verdict_name(verdict);
  j["anchor"] = mat_to_json(transform.anchor);
  j["anchor_symmetric"] = transform.anchor_symmetric;
  j["f"] = transfer_matrix_to_json(transform.f);
  j["lpr_report"] = lpr_report.to_json();
  return j;
}

bool bridge_route_applies(const TransferMatrix& g, BridgeRoute route) {
  return route == BridgeRoute::kZero ? zero_pole_order(g) == 0 : is_proper(g);
}

BridgeReport classify_lni_via_bridge(const TransferMatrix& g, BridgeRoute route) {
  BridgeReport report;
  report.route = route;
  report.transform =
      route == BridgeRoute::kZero ? to_lpr_via_zero(g) : to_lpr_via_infinity(g);
  report.lpr_report = is_lossless_pr(report.transform.f);
  if (!report.transform.anchor_symmetric)
    report.verdict = Verdict::kNotNi;  // anchor asymmetry refutes on its own
  else if (report.lpr_report.passed())
    report.verdict = Verdict::kLosslessNi;
  else if (report.lpr_report.verdict == Verdict::kPrUndecided)
    report.verdict = Verdict::kNiUndecided;
  else
    report.verdict = Verdict::kNotNi;
  return report;
}

std::vector<BridgeReport> classify_lni_via_all_routes(const TransferMatrix& g) {
  std::vector<BridgeReport> reports;
  if (bridge_route_applies(g, BridgeRoute::kZero))
    reports.push_back(classify_lni_via_bridge(g, BridgeRoute::kZero));
  if (bridge_route_applies(g, BridgeRoute::kInfinity))
    reports.push_back(classify_lni_via_bridge(g, BridgeRoute::kInfinity));
  if (reports.size() == 2) {
    const bool a = reports[0].verdict == Verdict::kLosslessNi;
    const bool b = reports[1].verdict == Verdict::kLosslessNi;
    if (a != b) throw std::logic_error("bridge routes disagree on the lossless verdict");
  }
  return reports;
}

}  // namespace lni
