#pragma once

#include "lni/classifier.hpp"

namespace lni {

enum class BridgeRoute { kZero, kInfinity };

struct BridgeResult {
  TransferMatrix f;        // the lossless positive real candidate
  MatQ anchor;             // G(0) (zero route) or G(inf) (infinity route)
  bool anchor_symmetric = false;
};

/// F(s) = -(1/s)(G(s) - G(0)); requires G to have no pole at zero. The
/// removable singularity at s = 0 cancels exactly.
BridgeResult to_lpr_via_zero(const TransferMatrix& g);

/// F(s) = s (G(s) - G(inf)); requires G proper.
BridgeResult to_lpr_via_infinity(const TransferMatrix& g);

struct BridgeReport {
  BridgeRoute route;
  BridgeResult transform;
  ClassificationReport lpr_report;   // on F
  Verdict verdict;                   // lossless NI verdict for G via the route
  nlohmann::json to_json() const;
};

/// Lossless negative imaginary test routed through lossless positive
/// realness: verdict LNI iff the anchor is symmetric and F is lossless PR.
BridgeReport classify_lni_via_bridge(const TransferMatrix& g, BridgeRoute route);

/// True when the route's hypothesis holds for g.
bool bridge_route_applies(const TransferMatrix& g, BridgeRoute route);

/// Runs every applicable route; inconsistent verdicts are a logic error.
std::vector<BridgeReport> classify_lni_via_all_routes(const TransferMatrix& g);

}  // namespace lni
