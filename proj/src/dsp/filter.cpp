// SPDX-License-Identifier: Apache-2.0

#include "dsp/filter.hpp"

namespace dsp {

namespace {

void check_config(const FilterConfig& config) {
  if (!is_power_of_two(config.n))
    throw DimensionError(DimensionError::Kind::NonPowerOfTwo,
                         "filter size " + std::to_string(config.n) + " is not a power of two");
  if (config.response.size() != config.n)
    throw DimensionError(DimensionError::Kind::SizeMismatch,
                         "filter response has " + std::to_string(config.response.size()) + " samples, expected " +
                             std::to_string(config.n));
}

void check_input(const ComplexVec& s, const FilterConfig& config) {
  if (s.size() != config.n)
    throw DimensionError(DimensionError::Kind::SizeMismatch,
                         "filter input has " + std::to_string(s.size()) + " samples, expected " +
                             std::to_string(config.n));
}

template <class C>
void spectral_product_fused(C& c, std::span<cf32> x, std::span<const cf32> h) {
  for (std::size_t k = 0; k < x.size(); ++k) {
    c.count(OpClass::Load, 4);
    const cf32 a = x[k];
    const cf32 b = h[k];
    const float re = fnma(c, a.imag(), b.imag(), mul(c, a.real(), b.real()));
    const float im = fma(c, a.imag(), b.real(), mul(c, a.real(), b.imag()));
    x[k] = {re, im};
    c.count(OpClass::Store, 2);
  }
}

template <class C>
void spectral_product_naive(C& c, std::span<cf32> x, std::span<const cf32> h) {
  for (std::size_t k = 0; k < x.size(); ++k) {
    c.count(OpClass::Load, 4);
    const cf32 a = x[k];
    const cf32 b = h[k];
    const float re = sub(c, mul(c, a.real(), b.real()), mul(c, a.imag(), b.imag()));
    const float im = add(c, mul(c, a.real(), b.imag()), mul(c, a.imag(), b.real()));
    x[k] = {re, im};
    c.count(OpClass::Store, 2);
  }
}

}  // namespace

FilterConfig FilterConfig::from_taps(const ComplexVec& taps) {
  return FilterConfig{taps.size(), fft(taps)};
}

FilterPlan::FilterPlan(FilterConfig config) : config_((check_config(config), std::move(config))), fft_(config_.n) {}

ComplexVec FilterPlan::apply(const ComplexVec& s, FlopCounter* counter) const {
  check_input(s, config_);
  ComplexVec y = s;
  fft_.forward(y.samples(), counter);
  if (counter) {
    spectral_product_fused(*counter, y.samples(), config_.response.samples());
  } else {
    NullCounter none;
    spectral_product_fused(none, y.samples(), config_.response.samples());
  }
  fft_.inverse(y.samples(), counter);
  return y;
}

ComplexVec filter_apply(const ComplexVec& s, const FilterConfig& config, FlopCounter* counter) {
  return FilterPlan(config).apply(s, counter);
}

ComplexVec filter_apply_naive(const ComplexVec& s, const FilterConfig& config, FlopCounter* counter) {
  check_config(config);
  check_input(s, config);
  ComplexVec y = s;
  fft_naive_inplace(y.samples(), false, counter);
  if (counter) {
    spectral_product_naive(*counter, y.samples(), config.response.samples());
  } else {
    NullCounter none;
    spectral_product_naive(none, y.samples(), config.response.samples());
  }
  fft_naive_inplace(y.samples(), true, counter);
  return y;
}

}  // namespace dsp
