// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <chrono>
#include <random>

#include "optimizer/block_registry.hpp"
#include "test_support.hpp"

using namespace optimizer;
using test_support::TempDir;
using test_support::write_file;
using test_support::write_script;

namespace {

RegistryErrorKind invoke_error(const BlockRegistry& reg, const std::string& name,
                               std::chrono::milliseconds timeout = kDefaultGeneratorTimeout,
                               RegistryError* captured = nullptr) {
  try {
    reg.invoke(name, {}, "haswell", timeout, [](const std::string&) {});
  } catch (const RegistryError& e) {
    if (captured) *captured = e;
    return e.kind();
  }
  ADD_FAILURE() << "expected RegistryError";
  return RegistryErrorKind::MissingBbsDir;
}

}  // namespace

TEST(BlockRegistry, LoadsExecutablesOnly) {
  TempDir dir;
  write_script(dir / "algo", test_support::minimal_candidate_script());
  write_script(dir / "beamform", test_support::minimal_candidate_script());
  write_file(dir / "README", "not a generator\n");
  std::filesystem::create_directory(dir / "nested");
  write_script(dir / "nested" / "deep", test_support::minimal_candidate_script());

  std::string warnings;
  const auto reg = BlockRegistry::load(dir.path(), [&](const std::string& w) { warnings += w; });
  ASSERT_EQ(reg.blocks().size(), 2u);
  EXPECT_TRUE(reg.contains("algo"));
  EXPECT_TRUE(reg.contains("beamform"));
  EXPECT_EQ(reg.at("algo").executable_path, dir / "algo");
  EXPECT_NE(warnings.find("README"), std::string::npos);
}

TEST(BlockRegistry, EmptyDirectoryIsLegal) {
  TempDir dir;
  const auto reg = BlockRegistry::load(dir.path());
  EXPECT_TRUE(reg.blocks().empty());
  EXPECT_EQ(invoke_error(reg, "algo"), RegistryErrorKind::UnknownKernel);
}

TEST(BlockRegistry, MissingDirectory) {
  try {
    BlockRegistry::load("/nonexistent/bbs");
    FAIL();
  } catch (const RegistryError& e) {
    EXPECT_EQ(e.kind(), RegistryErrorKind::MissingBbsDir);
  }
}

TEST(BlockRegistry, InvokeMinimalCandidate) {
  TempDir dir;
  write_script(dir / "k", test_support::minimal_candidate_script());
  const auto cands = BlockRegistry::load(dir.path()).invoke("k", {}, "haswell");
  ASSERT_EQ(cands.size(), 1u);
  EXPECT_EQ(cands[0].fragment.body, (std::vector<std::string>{"/* k */"}));
  EXPECT_EQ(cands[0].op_counts, OpCounts{});
}

TEST(BlockRegistry, PassesArchThroughEnvironmentAndArgvVerbatim) {
  TempDir dir;
  write_script(dir / "algo",
               "printf '%s\\n' \"$OPTIMIZER_ARCH\" > \"$(dirname \"$0\")/../seen_arch\"\n"
               "printf '%s\\n' \"$@\" > \"$(dirname \"$0\")/../seen_args\"\n" +
                   test_support::minimal_candidate_script());
  TempDir root;
  std::filesystem::create_directory(root / "bbs");
  std::filesystem::copy(dir / "algo", root / "bbs" / "algo");
  BlockRegistry::load(root / "bbs").invoke("algo", {"b", "c", "g", "h"}, "haswell");
  EXPECT_EQ(test_support::read_file(root / "seen_arch"), "haswell\n");
  EXPECT_EQ(test_support::read_file(root / "seen_args"), "b\nc\ng\nh\n");
}

TEST(BlockRegistryProperty, ArgumentFidelity) {
  // An echo probe: each argument is written NUL-terminated so any byte
  // sequence except NUL itself can be compared exactly.
  TempDir root;
  std::filesystem::create_directory(root / "bbs");
  write_script(root / "bbs" / "probe",
               "for a in \"$@\"; do printf '%s\\0' \"$a\"; done > \"$(dirname \"$0\")/../args\"\n" +
                   test_support::minimal_candidate_script());
  const auto reg = BlockRegistry::load(root / "bbs");

  std::mt19937 rng(5);
  std::uniform_int_distribution<int> count(0, 6);
  std::uniform_int_distribution<int> len(0, 12);
  const std::string alphabet = "ab c$*?;'\"\\|&<>(){}`~!#%\t=,.-_0123456789";
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<std::string> args(count(rng));
    for (auto& a : args)
      for (int k = len(rng); k > 0; --k) a += alphabet[pick(rng)];
    reg.invoke("probe", args, "haswell");
    std::string expected;
    for (const auto& a : args) expected += a + '\0';
    EXPECT_EQ(test_support::read_file(root / "args"), expected);
  }
}

TEST(BlockRegistry, GeneratorFailureCarriesStatusAndStderr) {
  TempDir dir;
  write_script(dir / "bad", "echo 'bad things' >&2\nexit 3\n");
  RegistryError err(RegistryErrorKind::MissingBbsDir, "");
  EXPECT_EQ(invoke_error(BlockRegistry::load(dir.path()), "bad", kDefaultGeneratorTimeout, &err),
            RegistryErrorKind::GeneratorFailed);
  EXPECT_EQ(err.exit_status(), 3);
  EXPECT_EQ(err.stderr_text(), "bad things\n");
}

TEST(BlockRegistry, StderrIsForwardedVerbatim) {
  TempDir dir;
  write_script(dir / "k", "printf 'note: x\\n' >&2\n" + test_support::minimal_candidate_script());
  std::string diag;
  BlockRegistry::load(dir.path()).invoke("k", {}, "a", kDefaultGeneratorTimeout,
                                         [&](const std::string& s) { diag += s; });
  EXPECT_EQ(diag, "note: x\n");
}

TEST(BlockRegistry, MalformedAndEmptyOutput) {
  TempDir dir;
  write_script(dir / "junk", "echo hello\n");
  write_script(dir / "silent", "exit 0\n");
  const auto reg = BlockRegistry::load(dir.path());
  RegistryError err(RegistryErrorKind::MissingBbsDir, "");
  EXPECT_EQ(invoke_error(reg, "junk", kDefaultGeneratorTimeout, &err), RegistryErrorKind::MalformedOutput);
  EXPECT_EQ(err.stream_line(), 1u);
  EXPECT_EQ(invoke_error(reg, "silent"), RegistryErrorKind::NoCandidates);
}

TEST(BlockRegistry, Timeout) {
  TempDir dir;
  write_script(dir / "slow", "exec sleep 10\n");
  const auto start = std::chrono::steady_clock::now();
  EXPECT_EQ(invoke_error(BlockRegistry::load(dir.path()), "slow", std::chrono::milliseconds(200)),
            RegistryErrorKind::GeneratorTimeout);
  EXPECT_LT(std::chrono::steady_clock::now() - start, std::chrono::seconds(5));
}

TEST(BlockRegistry, TimeoutAfterClosingStdout) {
  TempDir dir;
  write_script(dir / "lingers", "exec >/dev/null 2>&1\nsleep 10\n");
  EXPECT_EQ(invoke_error(BlockRegistry::load(dir.path()), "lingers", std::chrono::milliseconds(200)),
            RegistryErrorKind::GeneratorTimeout);
}

TEST(BlockRegistry, DeterministicAndIsolated) {
  TempDir dir;
  write_script(dir / "k", test_support::minimal_candidate_script("x", "y();"));
  const auto before = std::distance(std::filesystem::directory_iterator(dir.path()), {});
  const auto reg = BlockRegistry::load(dir.path());
  EXPECT_EQ(reg.invoke("k", {"1"}, "haswell"), reg.invoke("k", {"1"}, "haswell"));
  EXPECT_EQ(std::distance(std::filesystem::directory_iterator(dir.path()), {}), before);
}
