#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mcsh/datagen.hpp"
#include "mcsh/dynamics.hpp"

namespace mcsh::cli {

enum class Command { Simulate, GenData, CheckConstraints, CheckEstimates, NullformVerify, Converge, Norms };

const char* command_name(Command c);
/// Throws ConfigError for unknown names.
Command parse_command(std::string_view name);

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Everything a run needs. Keys of the text format are listed in
/// config.cpp next to their defaults; `write_config` emits all of them.
struct RunConfig {
  Command command = Command::Simulate;
  DataRecipe recipe{};
  double t_final = 1.0;
  double dt = 1e-3;
  int sample_every = 10;
  PotentialMode potential = PotentialMode::Consistent;
  std::string output = "mcsh-out";
  std::string data_file;            // start from this snapshot instead of generating
  std::string corpus_file;          // check-estimates: empty uses the built-in corpus
  int levels = 3;                   // converge: number of dt values (dt, dt/2, ...)
  long samples = 1000000;           // nullform-verify: symbol samples
  int states = 20;                  // nullform-verify: random states for the identities
  std::vector<int> norm_grids = {64, 128, 256, 512};
  double constraint_tol = 1e-6;     // check-constraints: relative tolerance

  /// Throws ConfigError naming the offending key.
  void validate() const;
  friend bool operator==(const RunConfig&, const RunConfig&);
};

/// Line-based "key = value" text; '#' starts a comment. Keys not present keep
/// the values of `base`. Unknown keys, duplicate keys and values of the wrong
/// type raise ConfigError.
RunConfig parse_config(std::string_view text, const RunConfig& base = {});
RunConfig load_config(const std::string& path, const RunConfig& base = {});

/// Every key with its value; parse_config of the result reproduces `cfg`.
std::string write_config(const RunConfig& cfg);

}  // namespace mcsh::cli
