// SPDX-License-Identifier: Apache-2.0

#include "optimizer/block_registry.hpp"

#include <unistd.h>

#include <iostream>

#include "optimizer/subprocess.hpp"

namespace optimizer {

namespace fs = std::filesystem;

std::string_view to_string(RegistryErrorKind kind) {
  switch (kind) {
    case RegistryErrorKind::MissingBbsDir: return "MissingBbsDir";
    case RegistryErrorKind::UnknownKernel: return "UnknownKernel";
    case RegistryErrorKind::GeneratorFailed: return "GeneratorFailed";
    case RegistryErrorKind::MalformedOutput: return "MalformedOutput";
    case RegistryErrorKind::NoCandidates: return "NoCandidates";
    case RegistryErrorKind::GeneratorTimeout: return "GeneratorTimeout";
  }
  return "RegistryError";
}

RegistryError::RegistryError(RegistryErrorKind kind, const std::string& message, std::optional<int> exit_status,
                             std::string stderr_text, std::optional<std::size_t> stream_line)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message),
      kind_(kind),
      exit_status_(exit_status),
      stderr_(std::move(stderr_text)),
      stream_line_(stream_line) {}

namespace {
void emit(const DiagnosticSink& sink, const std::string& msg) {
  if (sink) sink(msg);
  else std::cerr << msg;
}
}  // namespace

BlockRegistry BlockRegistry::load(const fs::path& bbs_dir, const DiagnosticSink& warn) {
  std::error_code ec;
  if (!fs::is_directory(bbs_dir, ec))
    throw RegistryError(RegistryErrorKind::MissingBbsDir, "building-block directory '" + bbs_dir.string() + "' does not exist");

  BlockRegistry registry;
  for (const auto& entry : fs::directory_iterator(bbs_dir)) {
    if (!entry.is_regular_file()) continue;
    const auto& path = entry.path();
    if (::access(path.c_str(), X_OK) != 0) {
      emit(warn, "warning: skipping non-executable file " + path.string() + "\n");
      continue;
    }
    const std::string name = path.filename().string();
    registry.blocks_.emplace(name, BuildingBlockId{name, path});
  }
  return registry;
}

const BuildingBlockId& BlockRegistry::at(const std::string& name) const {
  const auto it = blocks_.find(name);
  if (it == blocks_.end())
    throw RegistryError(RegistryErrorKind::UnknownKernel, "no building block named '" + name + "'");
  return it->second;
}

std::vector<Candidate> BlockRegistry::invoke(const std::string& name, const std::vector<std::string>& params,
                                             const std::string& arch_name, std::chrono::milliseconds timeout,
                                             const DiagnosticSink& diagnostics) const {
  const BuildingBlockId& block = at(name);
  ProcessResult result;
  try {
    result = run_process(block.executable_path, params, {{kArchEnvVar, arch_name}}, timeout);
  } catch (const SpawnError& e) {
    throw RegistryError(RegistryErrorKind::GeneratorFailed, e.what());
  }
  if (!result.err.empty()) emit(diagnostics, result.err);

  if (result.timed_out)
    throw RegistryError(RegistryErrorKind::GeneratorTimeout,
                        "generator '" + name + "' exceeded " + std::to_string(timeout.count()) + " ms", {}, result.err);
  if (result.signaled)
    throw RegistryError(RegistryErrorKind::GeneratorFailed,
                        "generator '" + name + "' killed by signal " + std::to_string(result.signal), {}, result.err);
  if (result.exit_status != 0)
    throw RegistryError(RegistryErrorKind::GeneratorFailed,
                        "generator '" + name + "' exited with status " + std::to_string(result.exit_status),
                        result.exit_status, result.err);

  std::vector<Candidate> candidates;
  try {
    candidates = parse_candidate_stream(result.out);
  } catch (const MalformedStream& e) {
    throw RegistryError(RegistryErrorKind::MalformedOutput,
                        "generator '" + name + "' output, " + e.what(), {}, result.err, e.line());
  }
  if (candidates.empty())
    throw RegistryError(RegistryErrorKind::NoCandidates, "generator '" + name + "' emitted no candidates", 0, result.err);
  return candidates;
}

}  // namespace optimizer
