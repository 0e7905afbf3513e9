#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "lni/cli.hpp"

namespace {

nlohmann::json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open input file: " + path);
  nlohmann::json j;
  in >> j;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "lni: exact classification, spectral decomposition, and state-space certificates for "
      "lossless negative imaginary and lossless positive real systems"};
  app.require_subcommand(1);

  std::string input_path, grid_spec;
  lni::CliOptions options;

  auto add_common = [&](CLI::App* cmd, bool needs_input) {
    if (needs_input)
      cmd->add_option("--input", input_path, "path to the input JSON document")->required();
    cmd->add_option("--format", options.format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--tolerance", options.tolerance,
                    "tolerance for numeric paths (default 1e-9)");
  };

  auto* classify =
      app.add_subcommand("classify", "decide lossless negative imaginary / positive real");
  add_common(classify, true);
  classify->add_option("--target", options.target, "class to test: lni or lpr")
      ->check(CLI::IsMember({"lni", "lpr"}));
  classify->add_option("--grid", grid_spec, "comma-separated rational frequencies to sample");

  auto* pfe = app.add_subcommand("pfe", "partial-fraction spectral decomposition");
  add_common(pfe, true);

  auto* bridge = app.add_subcommand("bridge", "classify through the lossless positive real image");
  add_common(bridge, true);
  bridge->add_option("--route", options.route, "zero, infinity, or auto")
      ->check(CLI::IsMember({"zero", "infinity", "auto"}));

  auto* realize_cmd = app.add_subcommand("realize", "exact minimal state-space realization");
  add_common(realize_cmd, true);

  auto* certify =
      app.add_subcommand("certify", "state-space lossless negative imaginary certificate");
  add_common(certify, true);

  auto* verify = app.add_subcommand("verify", "verify a user-supplied certificate");
  add_common(verify, true);
  verify->add_option("--kind", options.kind, "pr, lossless-pr, or lossless-ni")
      ->check(CLI::IsMember({"pr", "lossless-pr", "lossless-ni"}));

  auto* generate =
      app.add_subcommand("generate", "draw a random lossless negative imaginary system");
  add_common(generate, false);
  generate->add_option("--m", options.gen_m, "system dimension (default 1)");
  generate->add_option("--modes", options.gen_modes, "number of finite pole pairs (default 1)");
  generate->add_option("--zero-order", options.gen_zero_order, "pole order at zero: 0, 1, or 2");
  generate->add_option("--inf-order", options.gen_infinity_order,
                       "pole order at infinity: 0, 1, or 2");
  generate->add_option("--seed", options.seed, "random seed (default 1)");

  CLI11_PARSE(app, argc, argv);

  lni::AnalysisRequest request;
  request.options = options;
  try {
    if (!grid_spec.empty()) request.options.grid = lni::parse_grid(grid_spec);
    if (classify->parsed()) request.command = lni::Command::kClassify;
    if (pfe->parsed()) request.command = lni::Command::kPfe;
    if (bridge->parsed()) request.command = lni::Command::kBridge;
    if (realize_cmd->parsed()) request.command = lni::Command::kRealize;
    if (certify->parsed()) request.command = lni::Command::kCertify;
    if (verify->parsed()) request.command = lni::Command::kVerify;
    if (generate->parsed()) request.command = lni::Command::kGenerate;
    if (!input_path.empty()) request.input = load_json(input_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return lni::run(request, std::cout, std::cerr);
}
