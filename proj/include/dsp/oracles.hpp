// SPDX-License-Identifier: Apache-2.0

// Direct-summation reference computations in double precision. These share
// no code with the FFT or beamforming kernels they are used to check.

#pragma once

#include <complex>
#include <span>
#include <vector>

#include "dsp/complex_types.hpp"

namespace dsp::oracle {

using cf64 = std::complex<double>;

/// X[k] = sum_j x[j] exp(-2 pi i jk/n), O(n^2), rounded to float on output.
ComplexVec dft(const ComplexVec& x);

/// y[k] = sum_j s[j] h[(k - j) mod n], O(n^2) in double.
std::vector<cf64> circular_convolve(const ComplexVec& s, const ComplexVec& h);

/// R[j] = sum_k w[k] S[k][j] in double.
std::vector<cf64> beamform_row(std::span<const cf32> w, const ComplexMat& S);

/// sum_k |w[k]| |S[k][j]|: the magnitude scale used to express the error of
/// R[j] relative to the terms that produced it.
std::vector<double> beamform_row_scale(std::span<const cf32> w, const ComplexMat& S);

}  // namespace dsp::oracle
