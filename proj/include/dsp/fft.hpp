// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "dsp/complex_types.hpp"
#include "dsp/flop_counter.hpp"

namespace dsp {

constexpr bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

/// Iterative radix-2 decimation-in-time FFT with precomputed twiddle and
/// bit-reversal tables. Forward is unnormalised; inverse applies 1/n.
class FftPlan {
 public:
  explicit FftPlan(std::size_t n);

  std::size_t size() const noexcept { return n_; }

  void forward(std::span<cf32> x, FlopCounter* counter = nullptr) const;
  void inverse(std::span<cf32> x, FlopCounter* counter = nullptr) const;
  /// Inverse transform without the 1/n factor.
  void inverse_unscaled(std::span<cf32> x, FlopCounter* counter = nullptr) const;

 private:
  template <class C>
  void transform(std::span<cf32> x, const std::vector<cf32>& twiddles, C& counter) const;

  std::size_t n_;
  std::vector<cf32> forward_twiddles_;  // exp(-2*pi*i*j/n), j < n/2
  std::vector<cf32> inverse_twiddles_;
  std::vector<std::size_t> bit_reverse_;
};

ComplexVec fft(const ComplexVec& x);
ComplexVec ifft(const ComplexVec& x);

/// Hand-coded transform in the style being replaced: the reordering index
/// is recomputed per element, and twiddles come from a per-block complex
/// recurrence instead of a table. `inverse` includes the 1/n factor.
void fft_naive_inplace(std::span<cf32> x, bool inverse, FlopCounter* counter = nullptr);

}  // namespace dsp
