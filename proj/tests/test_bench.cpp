// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "optimizer/bench.hpp"

using namespace optimizer;

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string item; std::getline(in, item, sep);) out.push_back(item);
  return out;
}

}  // namespace

TEST(Bench, SingleRepetitionGivesOneSample) {
  const auto report = run_bench("beamform", BenchDims{4, 3, 5, 8}, 1, 0);
  ASSERT_EQ(report.rows.size(), 1u);
  EXPECT_EQ(report.rows[0].baseline_samples_us.size(), 1u);
  EXPECT_EQ(report.rows[0].variant_samples_us.size(), 1u);
  EXPECT_EQ(report.rows[0].dims, "antennas=4;f=3;b=5");
}

TEST(Bench, EmptySumGivesFiniteSpeedup) {
  const auto report = run_bench("beamform", BenchDims{64, 0, 60, 8}, 5, 1);
  EXPECT_TRUE(std::isfinite(report.rows[0].speedup));
  EXPECT_GT(report.rows[0].speedup, 0);
}

TEST(Bench, FilterRuns) {
  const auto report = run_bench("fftfilter", BenchDims{64, 36, 60, 256}, 3, 1);
  EXPECT_EQ(report.rows[0].dims, "n=256");
  EXPECT_GT(report.rows[0].baseline_us, 0);
  EXPECT_THROW(run_bench("fftfilter", BenchDims{64, 36, 60, 100}, 3, 1), std::exception);
  EXPECT_THROW(run_bench("turbo", BenchDims{}, 3, 1), std::invalid_argument);
}

TEST(Bench, RefusesNonEquivalentVariants) {
  int timed = 0;
  const BenchVariant good{"good", [&] { ++timed; return std::vector<float>{1, 2, 3}; }};
  const BenchVariant wrong{"wrong", [] { return std::vector<float>{1, 2, 3.5f}; }};
  const BenchVariant short_output{"short", [] { return std::vector<float>{1, 2}; }};
  EXPECT_THROW(bench_pair("k", "d", good, wrong, 10, 0), EquivalenceFailure);
  EXPECT_THROW(bench_pair("k", "d", good, short_output, 10, 0), EquivalenceFailure);
  EXPECT_LE(timed, 2);  // only the equivalence probes ran
  const BenchVariant close{"close", [] { return std::vector<float>{1, 2, 3.00001f}; }};
  EXPECT_NO_THROW(bench_pair("k", "d", good, close, 3, 0));
}

TEST(Bench, TableHasDisclaimerAndThreeColumns) {
  const auto text = format_table(run_bench("beamform", BenchDims{2, 2, 2, 8}, 2, 0));
  const auto lines = split(text, '\n');
  ASSERT_GE(lines.size(), 5u);
  EXPECT_EQ(lines[0], kMachineDisclaimer);
  EXPECT_EQ(lines[3], "Original (\xce\xbcs)\tNew (\xce\xbcs)\tSpeedup factor");
  const auto values = split(lines[4], '\t');
  ASSERT_EQ(values.size(), 3u);
  for (const auto& v : values) EXPECT_GT(std::stod(v), 0);
}

TEST(Bench, CsvSchema) {
  const auto lines = split(format_csv(run_bench("fftfilter", BenchDims{64, 36, 60, 16}, 2, 0)), '\n');
  ASSERT_EQ(lines.size(), 3u);
  EXPECT_EQ(lines[0], "kernel,dims,variant,median_us,speedup");
  EXPECT_EQ(split(lines[1], ',').size(), 5u);
  EXPECT_EQ(lines[1].rfind("fftfilter,n=16,naive,", 0), 0u);
  EXPECT_EQ(lines[2].rfind("fftfilter,n=16,optimized,", 0), 0u);
}
