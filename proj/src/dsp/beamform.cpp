// SPDX-License-Identifier: Apache-2.0

#include "dsp/beamform.hpp"

#include <array>

namespace dsp {

namespace {

void check_shapes(std::size_t w_len, const ComplexMat& S) {
  if (w_len != S.rows())
    throw DimensionError(DimensionError::Kind::DimMismatch,
                         "weight row has " + std::to_string(w_len) + " entries but S has " +
                             std::to_string(S.rows()) + " rows");
}

template <class C>
void naive_row(C& c, std::span<const cf32> w, const ComplexMat& S, std::span<cf32> r) {
  const std::size_t f = w.size();
  const std::size_t b = S.cols();
  c.set_phase(Phase::Prologue);
  for (std::size_t j = 0; j < b; ++j) {
    r[j] = {0.0f, 0.0f};
    c.count(OpClass::Store, 2);
  }
  c.set_phase(Phase::Inner);
  for (std::size_t k = 0; k < f; ++k) {
    for (std::size_t j = 0; j < b; ++j) {
      c.count(OpClass::Load, 2);
      const cf32 wk = w[k];
      c.count(OpClass::Perm, 2);
      const std::array<float, 2> w_re_dup{wk.real(), wk.real()};
      const std::array<float, 2> w_im_dup{wk.imag(), wk.imag()};

      c.count(OpClass::Load, 2);
      const cf32 s = S(k, j);
      c.count(OpClass::Perm, 1);
      const std::array<float, 2> s_lanes{s.real(), s.imag()};
      const std::array<float, 2> s_swapped{s.imag(), s.real()};

      const std::array<float, 2> t1{mul(c, w_re_dup[0], s_lanes[0]), mul(c, w_re_dup[1], s_lanes[1])};
      const std::array<float, 2> t2{mul(c, w_im_dup[0], s_swapped[0]), mul(c, w_im_dup[1], s_swapped[1])};
      const std::array<float, 2> prod{sub(c, t1[0], t2[0]), add(c, t1[1], t2[1])};

      c.count(OpClass::Load, 2);
      r[j] = {add(c, r[j].real(), prod[0]), add(c, r[j].imag(), prod[1])};
      c.count(OpClass::Store, 2);
    }
  }
}

/// Inner loop and write-back on an already split weight row.
template <class C>
void planar_row(C& c, const float* w_re, const float* w_im, std::size_t f, const ComplexMat& S, std::span<cf32> r) {
  const std::size_t b = S.cols();
  for (std::size_t j = 0; j < b; ++j) {
    c.set_phase(Phase::Inner);
    float acc_re = 0.0f;
    float acc_im = 0.0f;
    for (std::size_t k = 0; k < f; ++k) {
      c.count(OpClass::Load, 4);
      const float wr = w_re[k];
      const float wi = w_im[k];
      const cf32 s = S(k, j);
      acc_re = fma(c, wr, s.real(), acc_re);
      acc_re = fnma(c, wi, s.imag(), acc_re);
      acc_im = fma(c, wr, s.imag(), acc_im);
      acc_im = fma(c, wi, s.real(), acc_im);
    }
    c.set_phase(Phase::Epilogue);
    r[j] = {acc_re, acc_im};
    c.count(OpClass::Store, 2);
  }
  c.set_phase(Phase::Inner);
}

/// Deinterleaves one weight row: one permute per complex entry.
template <class C>
void split_row(C& c, std::span<const cf32> w, float* w_re, float* w_im) {
  c.set_phase(Phase::Prologue);
  for (std::size_t k = 0; k < w.size(); ++k) {
    c.count(OpClass::Load, 2);
    c.count(OpClass::Perm, 1);
    w_re[k] = w[k].real();
    w_im[k] = w[k].imag();
    c.count(OpClass::Store, 2);
  }
  c.set_phase(Phase::Inner);
}

template <class F>
void with_counter(FlopCounter* counter, F&& body) {
  if (counter) {
    body(*counter);
  } else {
    NullCounter none;
    body(none);
  }
}

}  // namespace

void BeamformDims::validate() const {
  if (antennas < 1 || b < 1)
    throw DimensionError(DimensionError::Kind::DimMismatch, "beamforming needs at least one antenna and one resource element");
}

std::string_view to_string(BeamformVariant v) {
  return v == BeamformVariant::Naive ? "naive" : "optimized";
}

ComplexVec beamform_row_naive(std::span<const cf32> w, const ComplexMat& S, FlopCounter* counter) {
  check_shapes(w.size(), S);
  ComplexVec r(S.cols());
  with_counter(counter, [&](auto& c) { naive_row(c, w, S, r.samples()); });
  return r;
}

ComplexVec beamform_row_optimized(std::span<const cf32> w, const ComplexMat& S, FlopCounter* counter) {
  check_shapes(w.size(), S);
  ComplexVec r(S.cols());
  std::vector<float> w_re(w.size());
  std::vector<float> w_im(w.size());
  with_counter(counter, [&](auto& c) {
    split_row(c, w, w_re.data(), w_im.data());
    planar_row(c, w_re.data(), w_im.data(), w.size(), S, r.samples());
  });
  return r;
}

BeamformPlan::BeamformPlan(ComplexMat W) : W_(std::move(W)), w_re_(W_.rows() * W_.cols()), w_im_(w_re_.size()) {
  NullCounter none;
  for (std::size_t a = 0; a < W_.rows(); ++a)
    split_row(none, W_.row(a), w_re_.data() + a * W_.cols(), w_im_.data() + a * W_.cols());
}

ComplexMat BeamformPlan::apply(const ComplexMat& S, BeamformVariant variant, FlopCounter* counter) const {
  check_shapes(W_.cols(), S);
  ComplexMat R(W_.rows(), S.cols());
  const std::size_t f = W_.cols();
  with_counter(counter, [&](auto& c) {
    for (std::size_t a = 0; a < W_.rows(); ++a) {
      if (variant == BeamformVariant::Naive)
        naive_row(c, W_.row(a), S, R.row(a));
      else
        planar_row(c, w_re_.data() + a * f, w_im_.data() + a * f, f, S, R.row(a));
    }
  });
  return R;
}

ComplexMat beamform_full(const ComplexMat& W, const ComplexMat& S, BeamformVariant variant, FlopCounter* counter) {
  return BeamformPlan(W).apply(S, variant, counter);
}

}  // namespace dsp
