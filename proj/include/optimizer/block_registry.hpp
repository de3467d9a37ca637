// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <chrono>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "optimizer/candidate.hpp"

namespace optimizer {

/// Environment variable through which generators learn the target profile.
inline constexpr const char* kArchEnvVar = "OPTIMIZER_ARCH";
inline constexpr std::chrono::seconds kDefaultGeneratorTimeout{30};

struct BuildingBlockId {
  std::string name;
  std::filesystem::path executable_path;

  bool operator==(const BuildingBlockId&) const = default;
};

enum class RegistryErrorKind {
  MissingBbsDir,
  UnknownKernel,
  GeneratorFailed,
  MalformedOutput,
  NoCandidates,
  GeneratorTimeout,
};

std::string_view to_string(RegistryErrorKind kind);

class RegistryError : public std::runtime_error {
 public:
  RegistryError(RegistryErrorKind kind, const std::string& message, std::optional<int> exit_status = {},
                std::string stderr_text = {}, std::optional<std::size_t> stream_line = {});

  RegistryErrorKind kind() const noexcept { return kind_; }
  std::optional<int> exit_status() const noexcept { return exit_status_; }
  const std::string& stderr_text() const noexcept { return stderr_; }
  /// First offending line of the candidate stream (MalformedOutput only).
  std::optional<std::size_t> stream_line() const noexcept { return stream_line_; }

 private:
  RegistryErrorKind kind_;
  std::optional<int> exit_status_;
  std::string stderr_;
  std::optional<std::size_t> stream_line_;
};

/// Sink for generator stderr and registry warnings; defaults to std::cerr.
using DiagnosticSink = std::function<void(const std::string&)>;

/// Executable generators found directly inside a `bbs/` directory.
class BlockRegistry {
 public:
  static BlockRegistry load(const std::filesystem::path& bbs_dir, const DiagnosticSink& warn = {});

  const std::map<std::string, BuildingBlockId>& blocks() const { return blocks_; }
  bool contains(const std::string& name) const { return blocks_.count(name) != 0; }
  const BuildingBlockId& at(const std::string& name) const;

  /// Runs the generator with `params` as its argument vector and the
  /// profile name in OPTIMIZER_ARCH, returning candidates in emission order.
  std::vector<Candidate> invoke(const std::string& name, const std::vector<std::string>& params,
                                const std::string& arch_name,
                                std::chrono::milliseconds timeout = kDefaultGeneratorTimeout,
                                const DiagnosticSink& diagnostics = {}) const;

 private:
  std::map<std::string, BuildingBlockId> blocks_;
};

}  // namespace optimizer
