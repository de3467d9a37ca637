// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <random>

#include "dsp/fft.hpp"
#include "dsp/oracles.hpp"
#include "test_support.hpp"

using namespace dsp;

namespace {

float max_abs_diff(const ComplexVec& a, const ComplexVec& b) {
  EXPECT_EQ(a.size(), b.size());
  float m = 0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace

TEST(DftOracle, DeltaAndConstant) {
  EXPECT_EQ(oracle::dft({1, 0, 0, 0}), (ComplexVec{1, 1, 1, 1}));
  const cf32 c{0.5f, -2.0f};
  const auto X = oracle::dft(ComplexVec(std::vector<cf32>(8, c)));
  EXPECT_EQ(X[0], 8.0f * c);
  for (std::size_t k = 1; k < 8; ++k) EXPECT_LT(std::abs(X[k]), 1e-6f);
}

TEST(Fft, DeltaAndConstant) {
  EXPECT_EQ(fft({1, 0, 0, 0}), (ComplexVec{1, 1, 1, 1}));
  const auto X = fft(ComplexVec(std::vector<cf32>(8, {3, 1})));
  EXPECT_EQ(X[0], cf32(24, 8));
  for (std::size_t k = 1; k < 8; ++k) EXPECT_LT(std::abs(X[k]), 1e-6f);
}

TEST(Fft, MatchesDirectDft) {
  std::mt19937 rng(1);
  for (std::size_t n : {1u, 2u, 4u, 16u, 64u}) {
    const auto x = test_support::random_vec(rng, n);
    EXPECT_LT(max_abs_diff(fft(x), oracle::dft(x)), 1e-5f) << "n=" << n;
  }
}

TEST(Fft, RoundTripAt2048) {
  std::mt19937 rng(2);
  const auto x = test_support::random_vec(rng, 2048);
  EXPECT_LT(max_abs_diff(ifft(fft(x)), x), 1e-5f);
}

TEST(Fft, Parseval) {
  std::mt19937 rng(3);
  const auto x = test_support::random_vec(rng, 2048);
  const auto X = fft(x);
  double time = 0, freq = 0;
  for (const auto& v : x) time += std::norm(std::complex<double>(v));
  for (const auto& v : X) freq += std::norm(std::complex<double>(v));
  freq /= 2048.0;
  EXPECT_LT(std::abs(time - freq) / time, 1e-4);
}

TEST(Fft, NaiveTransformAgrees) {
  std::mt19937 rng(4);
  for (std::size_t n : {1u, 2u, 8u, 256u, 2048u}) {
    const auto x = test_support::random_vec(rng, n);
    auto naive = x;
    fft_naive_inplace(naive.samples(), false);
    EXPECT_LT(max_abs_diff(naive, fft(x)), 1e-3f) << "n=" << n;
    fft_naive_inplace(naive.samples(), true);
    EXPECT_LT(max_abs_diff(naive, x), 1e-5f) << "n=" << n;
  }
}

TEST(Fft, RejectsNonPowerOfTwo) {
  for (std::size_t n : {0u, 3u, 12u, 2047u}) {
    try {
      FftPlan plan(n);
      FAIL() << n;
    } catch (const DimensionError& e) {
      EXPECT_EQ(e.kind(), DimensionError::Kind::NonPowerOfTwo);
    }
  }
  ComplexVec x(6);
  EXPECT_THROW(fft_naive_inplace(x.samples(), false), DimensionError);
  FftPlan plan(8);
  EXPECT_THROW(plan.forward(x.samples()), DimensionError);
}

TEST(Fft, CountingDoesNotChangeResults) {
  std::mt19937 rng(5);
  const auto x = test_support::random_vec(rng, 512);
  FftPlan plan(512);
  auto a = x, b = x;
  FlopCounter counter;
  plan.forward(a.samples());
  plan.forward(b.samples(), &counter);
  EXPECT_EQ(a, b);
  EXPECT_GT(counter.total().flops(), 0u);
}
