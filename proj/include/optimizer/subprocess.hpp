// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <chrono>
#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace optimizer {

struct ProcessResult {
  int exit_status = 0;     // valid when !signaled && !timed_out
  int signal = 0;          // valid when signaled
  bool signaled = false;
  bool timed_out = false;
  std::string out;
  std::string err;
};

class SpawnError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Runs `program` directly (no shell) with `args` as argv[1..], the current
/// environment plus `env_overrides`, and stdin redirected from /dev/null.
/// Captures both output streams; kills the child once `timeout` elapses.
ProcessResult run_process(const std::filesystem::path& program, const std::vector<std::string>& args,
                          const std::map<std::string, std::string>& env_overrides,
                          std::chrono::milliseconds timeout);

}  // namespace optimizer
