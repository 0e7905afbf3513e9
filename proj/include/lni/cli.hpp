#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "lni/bridge.hpp"
#include "lni/lmi.hpp"

namespace lni {

enum class Command { kClassify, kPfe, kBridge, kRealize, kCertify, kVerify, kGenerate };

struct CliOptions {
  std::string format = "text";  // "text" | "json"
  double tolerance = 1e-9;
  std::vector<Rational> grid;        // extra sampling frequencies for classify
  std::string route = "auto";        // bridge: "zero" | "infinity" | "auto"
  std::string kind = "lossless-ni";  // verify: "pr" | "lossless-pr" | "lossless-ni"
  std::string target = "lni";        // classify: "lni" | "lpr"
  std::uint64_t seed = 1;            // generate
  long gen_m = 1;
  int gen_modes = 1;
  int gen_zero_order = 0;
  int gen_infinity_order = 0;
};

struct AnalysisRequest {
  Command command = Command::kClassify;
  nlohmann::json input;  // parsed input document (ignored by generate)
  CliOptions options;
};

// Exit codes: 0 affirmative verdict, 1 negative verdict, 2 input/usage error.
int run(const AnalysisRequest& request, std::ostream& out, std::ostream& err);

/// Parses "w1,w2,..." into exact rational frequencies.
std::vector<Rational> parse_grid(const std::string& spec);

}  // namespace lni
