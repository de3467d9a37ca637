// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>

#include "dsp/complex_types.hpp"
#include "dsp/fft.hpp"
#include "dsp/flop_counter.hpp"

namespace dsp {

/// Frequency-domain filter: `response` is the FFT of the filter taps.
struct FilterConfig {
  std::size_t n = 2048;
  ComplexVec response;

  /// Builds the configuration from time-domain taps of length n.
  static FilterConfig from_taps(const ComplexVec& taps);
};

/// Reusable filter state: the FFT tables for `n` and the spectrum.
class FilterPlan {
 public:
  explicit FilterPlan(FilterConfig config);

  std::size_t size() const noexcept { return config_.n; }
  const FilterConfig& config() const noexcept { return config_; }

  /// IFFT(response .* FFT(s)), fused spectral product.
  ComplexVec apply(const ComplexVec& s, FlopCounter* counter = nullptr) const;

 private:
  FilterConfig config_;
  FftPlan fft_;
};

ComplexVec filter_apply(const ComplexVec& s, const FilterConfig& config, FlopCounter* counter = nullptr);

/// Same filter on the hand-coded FFT with an unfused spectral product.
ComplexVec filter_apply_naive(const ComplexVec& s, const FilterConfig& config, FlopCounter* counter = nullptr);

}  // namespace dsp
