#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "mcsh/cli/config.hpp"
#include "mcsh/cli/run.hpp"

int main(int argc, char** argv) {
  using namespace mcsh::cli;
  CLI::App app{"Maxwell-Chern-Simons-Higgs pseudospectral laboratory"};
  std::string command, config_path, output;
  std::uint64_t seed = 0;
  bool quiet = false;
  app.add_option("command", command,
                 "simulate | gen-data | check-constraints | check-estimates | nullform-verify | converge | norms")
      ->required();
  app.add_option("--config", config_path, "key = value configuration file");
  auto* out_opt = app.add_option("--output", output, "output directory");
  auto* seed_opt = app.add_option("--seed", seed, "random seed (overrides the config)");
  app.add_flag("--quiet", quiet, "suppress progress output");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kConfigError;
  }

  RunConfig cfg;
  try {
    cfg.command = parse_command(command);
    if (!config_path.empty()) cfg = load_config(config_path, cfg);
    cfg.command = parse_command(command);
    if (*out_opt) cfg.output = output;
    if (*seed_opt) cfg.recipe.seed = seed;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConfigError;
  }
  return run(cfg, std::cerr, quiet);
}
