// SPDX-License-Identifier: Apache-2.0

#include "optimizer/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <iomanip>
#include <memory>
#include <random>
#include <sstream>

#include "dsp/beamform.hpp"
#include "dsp/fft.hpp"
#include "dsp/filter.hpp"

namespace optimizer {

namespace {

volatile float g_sink = 0.0f;

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size() / 2;
  return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

std::vector<double> time_runs(const BenchVariant& v, std::size_t reps, std::size_t warmup) {
  using clock = std::chrono::steady_clock;
  for (std::size_t i = 0; i < warmup; ++i) {
    const auto out = v.run();
    if (!out.empty()) g_sink = g_sink + out.front();
  }
  std::vector<double> samples;
  samples.reserve(reps);
  for (std::size_t i = 0; i < reps; ++i) {
    const auto start = clock::now();
    const auto out = v.run();
    const auto stop = clock::now();
    float checksum = 0.0f;
    for (float x : out) checksum += x;
    g_sink = g_sink + checksum;
    samples.push_back(std::chrono::duration<double, std::micro>(stop - start).count());
  }
  return samples;
}

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

std::vector<float> flatten(const dsp::ComplexMat& m) { return {m.interleaved().begin(), m.interleaved().end()}; }
std::vector<float> flatten(const dsp::ComplexVec& v) { return {v.interleaved().begin(), v.interleaved().end()}; }

}  // namespace

BenchRow bench_pair(const std::string& kernel, const std::string& dims, const BenchVariant& baseline,
                    const BenchVariant& variant, std::size_t reps, std::size_t warmup, double rel_tolerance) {
  if (reps == 0) throw std::invalid_argument("benchmark needs at least one repetition");

  const auto expected = baseline.run();
  const auto actual = variant.run();
  if (expected.size() != actual.size())
    throw EquivalenceFailure(variant.label + " produced " + std::to_string(actual.size()) + " values, " +
                             baseline.label + " produced " + std::to_string(expected.size()));
  double scale = 1.0;
  for (float x : expected) scale = std::max(scale, static_cast<double>(std::fabs(x)));
  double worst = 0.0;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    const double d = std::fabs(static_cast<double>(expected[i]) - actual[i]);
    if (!(d <= worst)) worst = d;  // NaN propagates
  }
  if (!(worst <= rel_tolerance * scale)) {
    std::ostringstream os;
    os << kernel << " " << dims << ": " << variant.label << " disagrees with " << baseline.label
       << " (max abs difference " << worst << ", allowed " << rel_tolerance * scale << "); refusing to time";
    throw EquivalenceFailure(os.str());
  }

  BenchRow row;
  row.kernel = kernel;
  row.dims = dims;
  row.baseline_label = baseline.label;
  row.variant_label = variant.label;
  row.baseline_samples_us = time_runs(baseline, reps, warmup);
  row.variant_samples_us = time_runs(variant, reps, warmup);
  row.baseline_us = std::max(median(row.baseline_samples_us), kMinTimeUs);
  row.variant_us = std::max(median(row.variant_samples_us), kMinTimeUs);
  row.speedup = row.baseline_us / row.variant_us;
  return row;
}

BenchReport run_bench(const std::string& kernel, const BenchDims& dims, std::size_t reps, std::size_t warmup) {
  std::mt19937 rng(2048);
  std::uniform_real_distribution<float> uni(-1.0f, 1.0f);
  auto random_sample = [&] { return dsp::cf32(uni(rng), uni(rng)); };

  BenchReport report;
  report.repetitions = reps;
  report.warmup = warmup;
  report.timestamp = utc_timestamp();

  if (kernel == "beamform") {
    dsp::BeamformDims bd{dims.antennas, dims.f, dims.b};
    bd.validate();
    dsp::ComplexMat W(bd.antennas, bd.f);
    dsp::ComplexMat S(bd.f, bd.b);
    for (std::size_t r = 0; r < W.rows(); ++r)
      for (auto& x : W.row(r)) x = random_sample();
    for (std::size_t r = 0; r < S.rows(); ++r)
      for (auto& x : S.row(r)) x = random_sample();
    const auto plan = std::make_shared<dsp::BeamformPlan>(W);
    const std::string dim_text =
        "antennas=" + std::to_string(bd.antennas) + ";f=" + std::to_string(bd.f) + ";b=" + std::to_string(bd.b);
    report.rows.push_back(bench_pair(
        kernel, dim_text, {"naive", [plan, S] { return flatten(plan->apply(S, dsp::BeamformVariant::Naive)); }},
        {"optimized", [plan, S] { return flatten(plan->apply(S, dsp::BeamformVariant::Optimized)); }}, reps, warmup));
    return report;
  }

  if (kernel == "fftfilter") {
    if (!dsp::is_power_of_two(dims.n))
      throw dsp::DimensionError(dsp::DimensionError::Kind::NonPowerOfTwo, "filter size must be a power of two");
    dsp::ComplexVec s(dims.n);
    dsp::ComplexVec taps(dims.n);
    for (auto& x : s) x = random_sample();
    for (auto& x : taps) x = random_sample();
    const auto plan = std::make_shared<dsp::FilterPlan>(dsp::FilterConfig::from_taps(taps));
    const std::string dim_text = "n=" + std::to_string(dims.n);
    report.rows.push_back(bench_pair(
        kernel, dim_text, {"naive", [plan, s] { return flatten(dsp::filter_apply_naive(s, plan->config())); }},
        {"optimized", [plan, s] { return flatten(plan->apply(s)); }}, reps, warmup));
    return report;
  }

  throw std::invalid_argument("unknown benchmark kernel '" + kernel + "' (expected beamform or fftfilter)");
}

std::string format_table(const BenchReport& report) {
  std::ostringstream os;
  os << kMachineDisclaimer << "\n";
  os << "# repetitions: " << report.repetitions << " (median reported), warmup: " << report.warmup
     << ", timestamp: " << report.timestamp << "\n";
  os << std::fixed << std::setprecision(3);
  for (const auto& row : report.rows) {
    os << "# kernel: " << row.kernel << ", dims: " << row.dims << ", original: " << row.baseline_label
       << ", new: " << row.variant_label << "\n";
    os << "Original (\xce\xbcs)\tNew (\xce\xbcs)\tSpeedup factor\n";
    os << row.baseline_us << '\t' << row.variant_us << '\t' << std::setprecision(2) << row.speedup << "\n"
       << std::setprecision(3);
  }
  return os.str();
}

std::string format_csv(const BenchReport& report) {
  std::ostringstream os;
  os << "kernel,dims,variant,median_us,speedup\n";
  os << std::setprecision(6);
  for (const auto& row : report.rows) {
    os << row.kernel << ',' << row.dims << ',' << row.baseline_label << ',' << row.baseline_us << ",1\n";
    os << row.kernel << ',' << row.dims << ',' << row.variant_label << ',' << row.variant_us << ',' << row.speedup
       << "\n";
  }
  return os.str();
}

}  // namespace optimizer
