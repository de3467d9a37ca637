// SPDX-License-Identifier: Apache-2.0

#include "dsp/oracles.hpp"

#include <cmath>
#include <numbers>

namespace dsp::oracle {

ComplexVec dft(const ComplexVec& x) {
  const std::size_t n = x.size();
  ComplexVec out(n);
  for (std::size_t k = 0; k < n; ++k) {
    cf64 sum = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      // Reduce jk mod n first so the angle stays small and exact.
      const double angle = -2.0 * std::numbers::pi * static_cast<double>((j * k) % n) / static_cast<double>(n);
      sum += cf64(x[j]) * cf64(std::cos(angle), std::sin(angle));
    }
    out[k] = cf32(static_cast<float>(sum.real()), static_cast<float>(sum.imag()));
  }
  return out;
}

std::vector<cf64> circular_convolve(const ComplexVec& s, const ComplexVec& h) {
  if (s.size() != h.size())
    throw DimensionError(DimensionError::Kind::SizeMismatch, "circular convolution of unequal lengths");
  const std::size_t n = s.size();
  std::vector<cf64> y(n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < n; ++j) y[k] += cf64(s[j]) * cf64(h[(k + n - j) % n]);
  return y;
}

std::vector<cf64> beamform_row(std::span<const cf32> w, const ComplexMat& S) {
  if (w.size() != S.rows())
    throw DimensionError(DimensionError::Kind::DimMismatch, "weight row length does not match S rows");
  std::vector<cf64> r(S.cols());
  for (std::size_t j = 0; j < S.cols(); ++j)
    for (std::size_t k = 0; k < w.size(); ++k) r[j] += cf64(w[k]) * cf64(S(k, j));
  return r;
}

std::vector<double> beamform_row_scale(std::span<const cf32> w, const ComplexMat& S) {
  std::vector<double> scale(S.cols());
  for (std::size_t j = 0; j < S.cols(); ++j)
    for (std::size_t k = 0; k < w.size(); ++k) scale[j] += std::abs(cf64(w[k])) * std::abs(cf64(S(k, j)));
  return scale;
}

}  // namespace dsp::oracle
