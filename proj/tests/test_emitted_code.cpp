// SPDX-License-Identifier: Apache-2.0

// Compiles rewritten sources with the host compiler and runs them.

#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "cli_support.hpp"
#include "test_support.hpp"

using cli_support::run;
using cli_support::run_compiler;
using test_support::TempDir;

namespace {

const std::string kData = TEST_DATA_DIR;

std::string build_and_run(const std::filesystem::path& source, const std::filesystem::path& exe,
                          const std::vector<std::string>& extra_flags) {
  std::vector<std::string> args = {"-std=c++17", "-O1", "-ffp-contract=off", "-Wall", "-Werror", "-o", exe.string()};
  args.insert(args.end(), extra_flags.begin(), extra_flags.end());
  args.push_back(source.string());
  const auto cc = run_compiler(args);
  EXPECT_EQ(cc.exit_status, 0) << cc.err;
  if (cc.exit_status != 0) return {};
  const auto r = optimizer::run_process(exe, {}, {}, std::chrono::seconds(60));
  EXPECT_EQ(r.exit_status, 0) << r.err;
  return r.out;
}

std::vector<double> numbers(const std::string& text) {
  std::vector<double> v;
  std::istringstream in(text);
  for (double x; in >> x;) v.push_back(x);
  return v;
}

}  // namespace

TEST(EmittedCode, BothGuardSettingsCompileAndAgree) {
  for (const std::string arch : {"haswell", "generic-nofma"}) {
    TempDir dir;
    const auto rewritten = dir / "rewritten.cpp";
    const auto r = run({kData + "/kernels_driver.cpp", "--bbs", SHIPPED_BBS_DIR, "--arch", arch, "-o",
                        rewritten.string()});
    ASSERT_EQ(r.exit_status, 0) << r.err;

    const auto original = build_and_run(kData + "/kernels_driver.cpp", dir / "original", {});
    const auto fallback = build_and_run(rewritten, dir / "fallback", {});
    const auto optimized = build_and_run(rewritten, dir / "optimized", {"-DOPTIMIZER_ACTIVATED"});

    // With the macro undefined the rewritten file is the original program.
    EXPECT_EQ(fallback, original) << arch;

    const auto want = numbers(original);
    const auto got = numbers(optimized);
    ASSERT_EQ(want.size(), 2u * 60u + 2u * 64u);
    ASSERT_EQ(got.size(), want.size());
    double scale = 1.0;
    for (double x : want) scale = std::max(scale, std::abs(x));
    for (std::size_t i = 0; i < want.size(); ++i)
      EXPECT_LT(std::abs(got[i] - want[i]) / scale, 1e-4) << arch << " value " << i;
  }
}

TEST(EmittedCode, GoldenPlaceholderOutputCompilesBothWays) {
  TempDir dir;
  for (const auto& flags : {std::vector<std::string>{}, std::vector<std::string>{"-DOPTIMIZER_ACTIVATED"}}) {
    const auto out = build_and_run(kData + "/annotated_example.expected.cpp", dir / "prog", flags);
    EXPECT_EQ(out, flags.empty() ? "begin\nBAD\nBAD\nend\n" : "begin\nend\n");
  }
}
