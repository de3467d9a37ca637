// SPDX-License-Identifier: Apache-2.0

#include "dsp/fft.hpp"

#include <numbers>
#include <utility>

namespace dsp {

namespace {

void require_power_of_two(std::size_t n) {
  if (!is_power_of_two(n))
    throw DimensionError(DimensionError::Kind::NonPowerOfTwo,
                         "FFT size " + std::to_string(n) + " is not a power of two");
}

std::size_t log2_exact(std::size_t n) {
  std::size_t bits = 0;
  while ((std::size_t{1} << bits) < n) ++bits;
  return bits;
}

std::size_t reverse_bits(std::size_t i, std::size_t bits) {
  std::size_t r = 0;
  for (std::size_t b = 0; b < bits; ++b) r |= ((i >> b) & 1u) << (bits - 1 - b);
  return r;
}

template <class C>
void swap_counted(C& c, cf32& a, cf32& b) {
  c.count(OpClass::Load, 4);
  c.count(OpClass::Perm, 2);
  c.count(OpClass::Store, 4);
  std::swap(a, b);
}

template <class C>
void scale_counted(C& c, std::span<cf32> x, float s) {
  for (auto& v : x) {
    c.count(OpClass::Load, 2);
    v = {mul(c, v.real(), s), mul(c, v.imag(), s)};
    c.count(OpClass::Store, 2);
  }
}

template <class C>
void naive_impl(std::span<cf32> x, bool inverse, C& c) {
  const std::size_t n = x.size();
  const std::size_t bits = log2_exact(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = reverse_bits(i, bits);
    if (i < j) swap_counted(c, x[i], x[j]);
  }

  const double sign = inverse ? 1.0 : -1.0;
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t half = len / 2;
    const double angle = sign * 2.0 * std::numbers::pi / static_cast<double>(len);
    const double step_re = std::cos(angle);
    const double step_im = std::sin(angle);
    for (std::size_t i = 0; i < n; i += len) {
      double w_re = 1.0;
      double w_im = 0.0;
      for (std::size_t j = 0; j < half; ++j) {
        cf32& top = x[i + j];
        cf32& bottom = x[i + j + half];
        c.count(OpClass::Load, 4);
        const float wr = static_cast<float>(w_re);
        const float wi = static_cast<float>(w_im);
        const float tr = sub(c, mul(c, bottom.real(), wr), mul(c, bottom.imag(), wi));
        const float ti = add(c, mul(c, bottom.real(), wi), mul(c, bottom.imag(), wr));
        const cf32 u = top;
        top = {add(c, u.real(), tr), add(c, u.imag(), ti)};
        bottom = {sub(c, u.real(), tr), sub(c, u.imag(), ti)};
        c.count(OpClass::Store, 4);

        // Advance the twiddle: w *= step, 4 mul + 2 add.
        c.count(OpClass::Mul, 4);
        c.count(OpClass::Add, 2);
        const double next_re = w_re * step_re - w_im * step_im;
        const double next_im = w_re * step_im + w_im * step_re;
        w_re = next_re;
        w_im = next_im;
      }
    }
  }
  if (inverse) scale_counted(c, x, 1.0f / static_cast<float>(n));
}

}  // namespace

FftPlan::FftPlan(std::size_t n) : n_(n) {
  require_power_of_two(n);
  const std::size_t bits = log2_exact(n);
  bit_reverse_.resize(n);
  for (std::size_t i = 0; i < n; ++i) bit_reverse_[i] = reverse_bits(i, bits);
  forward_twiddles_.resize(n / 2);
  inverse_twiddles_.resize(n / 2);
  for (std::size_t j = 0; j < n / 2; ++j) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n);
    forward_twiddles_[j] = {static_cast<float>(std::cos(angle)), static_cast<float>(-std::sin(angle))};
    inverse_twiddles_[j] = std::conj(forward_twiddles_[j]);
  }
}

template <class C>
void FftPlan::transform(std::span<cf32> x, const std::vector<cf32>& twiddles, C& c) const {
  if (x.size() != n_)
    throw DimensionError(DimensionError::Kind::SizeMismatch,
                         "FFT plan of size " + std::to_string(n_) + " applied to " + std::to_string(x.size()) + " samples");
  for (std::size_t i = 0; i < n_; ++i) {
    const std::size_t j = bit_reverse_[i];
    if (i < j) swap_counted(c, x[i], x[j]);
  }
  for (std::size_t len = 2; len <= n_; len <<= 1) {
    const std::size_t half = len / 2;
    const std::size_t stride = n_ / len;
    for (std::size_t i = 0; i < n_; i += len) {
      for (std::size_t j = 0; j < half; ++j) {
        const cf32 w = twiddles[j * stride];
        cf32& top = x[i + j];
        cf32& bottom = x[i + j + half];
        c.count(OpClass::Load, 6);
        const float tr = fnma(c, bottom.imag(), w.imag(), mul(c, bottom.real(), w.real()));
        const float ti = fma(c, bottom.imag(), w.real(), mul(c, bottom.real(), w.imag()));
        const cf32 u = top;
        top = {add(c, u.real(), tr), add(c, u.imag(), ti)};
        bottom = {sub(c, u.real(), tr), sub(c, u.imag(), ti)};
        c.count(OpClass::Store, 4);
      }
    }
  }
}

void FftPlan::forward(std::span<cf32> x, FlopCounter* counter) const {
  if (counter) return transform(x, forward_twiddles_, *counter);
  NullCounter none;
  transform(x, forward_twiddles_, none);
}

void FftPlan::inverse_unscaled(std::span<cf32> x, FlopCounter* counter) const {
  if (counter) return transform(x, inverse_twiddles_, *counter);
  NullCounter none;
  transform(x, inverse_twiddles_, none);
}

void FftPlan::inverse(std::span<cf32> x, FlopCounter* counter) const {
  inverse_unscaled(x, counter);
  const float s = 1.0f / static_cast<float>(n_);
  if (counter) return scale_counted(*counter, x, s);
  NullCounter none;
  scale_counted(none, x, s);
}

ComplexVec fft(const ComplexVec& x) {
  ComplexVec out = x;
  FftPlan(x.size()).forward(out.samples());
  return out;
}

ComplexVec ifft(const ComplexVec& x) {
  ComplexVec out = x;
  FftPlan(x.size()).inverse(out.samples());
  return out;
}

void fft_naive_inplace(std::span<cf32> x, bool inverse, FlopCounter* counter) {
  require_power_of_two(x.size());
  if (counter) return naive_impl(x, inverse, *counter);
  NullCounter none;
  naive_impl(x, inverse, none);
}

}  // namespace dsp
