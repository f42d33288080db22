#pragma once

#include <iosfwd>
#include <string>

#include "mcsh/cli/config.hpp"

namespace mcsh::cli {

/// Process exit statuses.
enum ExitStatus : int { kOk = 0, kCheckFailed = 1, kConfigError = 2, kBlowUp = 3 };

/// Column names of the diagnostics CSV, in order.
const std::string& diagnostics_header();

/// Executes cfg.command, writing the manifest and artifacts into cfg.output.
/// Progress and summaries go to `log` unless `quiet`.
int run(const RunConfig& cfg, std::ostream& log, bool quiet = false);

}  // namespace mcsh::cli
