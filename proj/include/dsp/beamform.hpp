// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "dsp/complex_types.hpp"
#include "dsp/flop_counter.hpp"

namespace dsp {

/// W is antennas x f, S is f x b, R = W * S is antennas x b.
struct BeamformDims {
  std::size_t antennas = 64;
  std::size_t f = 36;   // parallel flows
  std::size_t b = 60;   // resource elements

  void validate() const;
};

enum class BeamformVariant { Naive, Optimized };

std::string_view to_string(BeamformVariant v);

/// R[j] = sum_k w[k] * S[k][j] on interleaved data, the way a lane-based
/// complex multiply does it: duplicate w's parts, swap s's parts, two
/// multiplies, add/sub, then accumulate into R in memory.
ComplexVec beamform_row_naive(std::span<const cf32> w, const ComplexMat& S, FlopCounter* counter = nullptr);

/// Same product after splitting w into real and imaginary planes. Each
/// output keeps two register accumulators fed by four fused multiply-adds
/// per term, so the inner loop has no standalone multiply and no permute.
ComplexVec beamform_row_optimized(std::span<const cf32> w, const ComplexMat& S, FlopCounter* counter = nullptr);

/// Precoding matrix with its planar split computed once, for the common case
/// of a constant W applied to a stream of symbol blocks. Immutable after
/// construction, so one plan may serve concurrent callers.
class BeamformPlan {
 public:
  explicit BeamformPlan(ComplexMat W);

  std::size_t antennas() const noexcept { return W_.rows(); }
  std::size_t flows() const noexcept { return W_.cols(); }
  const ComplexMat& weights() const noexcept { return W_; }

  ComplexMat apply(const ComplexMat& S, BeamformVariant variant, FlopCounter* counter = nullptr) const;

 private:
  ComplexMat W_;
  std::vector<float> w_re_;  // antennas x f
  std::vector<float> w_im_;
};

ComplexMat beamform_full(const ComplexMat& W, const ComplexMat& S, BeamformVariant variant,
                         FlopCounter* counter = nullptr);

}  // namespace dsp
