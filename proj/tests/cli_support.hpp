// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "optimizer/subprocess.hpp"

namespace cli_support {

inline optimizer::ProcessResult run(const std::vector<std::string>& args,
                                    const std::map<std::string, std::string>& env = {}) {
  return optimizer::run_process(OPTIMIZER_EXE, args, env, std::chrono::seconds(120));
}

inline optimizer::ProcessResult run_compiler(const std::vector<std::string>& args) {
  return optimizer::run_process(HOST_CXX_COMPILER, args, {}, std::chrono::seconds(300));
}

}  // namespace cli_support
