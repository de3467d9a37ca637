// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace optimizer {

/// Printed at the top of every benchmark table.
inline constexpr const char* kMachineDisclaimer =
    "# Timings are machine-dependent: they reflect this CPU, compiler and system load, "
    "and are not comparable across machines.";

class EquivalenceFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct BenchRow {
  std::string kernel;
  std::string dims;
  std::string baseline_label;
  double baseline_us = 0;  // median
  std::string variant_label;
  double variant_us = 0;   // median
  double speedup = 0;      // baseline_us / variant_us
  std::vector<double> baseline_samples_us;
  std::vector<double> variant_samples_us;
};

struct BenchReport {
  std::vector<BenchRow> rows;
  std::size_t repetitions = 0;
  std::size_t warmup = 0;
  std::string timestamp;  // UTC, ISO 8601
};

struct BenchDims {
  std::size_t antennas = 64;
  std::size_t f = 36;
  std::size_t b = 60;
  std::size_t n = 2048;
};

/// A kernel variant under test. `run` performs one complete execution and
/// returns its output flattened to floats.
struct BenchVariant {
  std::string label;
  std::function<std::vector<float>()> run;
};

/// Medians below this are clamped so the speedup stays finite.
inline constexpr double kMinTimeUs = 1e-3;

/// Checks both variants agree to `rel_tolerance` (relative to the largest
/// baseline magnitude), then times them. Throws EquivalenceFailure first if
/// they disagree; no timings are produced for a wrong kernel.
BenchRow bench_pair(const std::string& kernel, const std::string& dims, const BenchVariant& baseline,
                    const BenchVariant& variant, std::size_t reps, std::size_t warmup, double rel_tolerance = 1e-4);

/// Naive versus optimized for `beamform` or `fftfilter` on random inputs.
BenchReport run_bench(const std::string& kernel, const BenchDims& dims, std::size_t reps, std::size_t warmup);

std::string format_table(const BenchReport& report);
/// `kernel,dims,variant,median_us,speedup`, one row per variant.
std::string format_csv(const BenchReport& report);

}  // namespace optimizer
