// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <chrono>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "optimizer/block_registry.hpp"
#include "optimizer/code_emitter.hpp"

namespace optimizer {

/// Process exit codes of the optimizer. Stable; scripts depend on them.
enum ExitCode : int {
  kExitSuccess = 0,
  kExitParseError = 1,
  kExitGeneratorError = 2,
  kExitUnknownKernel = 3,
  kExitIoOrConfigError = 4,
};

struct RunConfig {
  std::filesystem::path input_path;
  std::optional<std::filesystem::path> output_path;
  std::filesystem::path bbs_dir;
  std::string arch;  // profile name or path
  std::vector<std::filesystem::path> profile_search_dirs;
  std::string guard_macro = kDefaultGuardMacro;
  std::size_t indent_unit = 4;
  bool dry_run = false;
  bool in_place = false;
  std::chrono::milliseconds generator_timeout = kDefaultGeneratorTimeout;
};

/// parse -> load registry -> invoke and select per region -> emit -> write.
/// Dry runs report each region's candidate costs and the winner on `out`
/// instead of writing. Every failure is reported on `diag` as file:line.
int run_optimize(const RunConfig& config, std::ostream& out, std::ostream& diag);

}  // namespace optimizer
