// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <fstream>
#include <random>

#include "dsp/filter.hpp"
#include "dsp/oracles.hpp"
#include "test_support.hpp"

using namespace dsp;

namespace {

ComplexVec load(const std::string& name) {
  std::ifstream in(std::string(TEST_DATA_DIR) + "/" + name);
  if (!in) throw std::runtime_error("missing fixture " + name);
  return read_complex_text(in);
}

double max_abs_diff(const ComplexVec& got, const std::vector<oracle::cf64>& want) {
  EXPECT_EQ(got.size(), want.size());
  double m = 0;
  for (std::size_t i = 0; i < got.size(); ++i) m = std::max(m, std::abs(oracle::cf64(got[i]) - want[i]));
  return m;
}

std::vector<oracle::cf64> widen(const ComplexVec& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST(Filter, IdentityResponse) {
  std::mt19937 rng(1);
  for (std::size_t n : {8u, 2048u}) {
    const auto s = test_support::random_vec(rng, n);
    const FilterConfig cfg{n, ComplexVec(std::vector<cf32>(n, {1, 0}))};
    EXPECT_LT(max_abs_diff(filter_apply(s, cfg), widen(s)), 1e-4);
    EXPECT_LT(max_abs_diff(filter_apply_naive(s, cfg), widen(s)), 1e-4);
  }
}

TEST(CircularConvolveOracle, DeltaAndShift) {
  const ComplexVec s{{1, 2}, {3, 4}, {5, 6}, {7, 8}};
  EXPECT_EQ(oracle::circular_convolve(s, {1, 0, 0, 0}), widen(s));
  EXPECT_EQ(oracle::circular_convolve(s, {0, 1, 0, 0}), widen(ComplexVec{s[3], s[0], s[1], s[2]}));
}

TEST(Filter, MatchesCircularConvolution) {
  std::mt19937 rng(2);
  for (std::size_t n : {8u, 16u, 32u, 64u, 2048u}) {
    for (int trial = 0; trial < 5; ++trial) {
      const auto s = test_support::random_vec(rng, n);
      const auto h = test_support::random_vec(rng, n);
      const auto want = oracle::circular_convolve(s, h);
      const auto cfg = FilterConfig::from_taps(h);
      const double tol = n <= 64 ? 1e-4 : 1e-3;
      EXPECT_LT(max_abs_diff(filter_apply(s, cfg), want), tol) << "n=" << n;
      EXPECT_LT(max_abs_diff(filter_apply_naive(s, cfg), want), tol) << "n=" << n;
    }
  }
}

TEST(Filter, FrozenFixture) {
  // Expected values computed by tools/make_filter_fixture.py as an exact
  // rational direct sum.
  const auto s = load("filter_n16_s.txt");
  const auto taps = load("filter_n16_taps.txt");
  const auto expected = load("filter_n16_expected.txt");
  ASSERT_EQ(s.size(), 16u);
  ASSERT_EQ(expected.size(), 16u);
  EXPECT_LT(max_abs_diff(filter_apply(s, FilterConfig::from_taps(taps)), widen(expected)), 1e-4);
  EXPECT_LT(max_abs_diff(ComplexVec(std::vector<cf32>(expected.begin(), expected.end())),
                         oracle::circular_convolve(s, taps)),
            1e-6);
}

TEST(FilterProperty, Linearity) {
  std::mt19937 rng(3);
  std::uniform_real_distribution<float> uni(-2, 2);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = std::size_t{8} << (trial % 6);
    const auto s1 = test_support::random_vec(rng, n);
    const auto s2 = test_support::random_vec(rng, n);
    const auto cfg = FilterConfig::from_taps(test_support::random_vec(rng, n));
    const cf32 alpha{uni(rng), uni(rng)};
    ComplexVec mix(n);
    for (std::size_t i = 0; i < n; ++i) mix[i] = alpha * s1[i] + s2[i];
    const auto y1 = filter_apply(s1, cfg), y2 = filter_apply(s2, cfg), y = filter_apply(mix, cfg);
    for (std::size_t i = 0; i < n; ++i) ASSERT_LT(std::abs(y[i] - (alpha * y1[i] + y2[i])), 1e-4f * std::sqrt(float(n)));
  }
}

TEST(Filter, SizeMismatch) {
  const auto cfg = FilterConfig::from_taps(ComplexVec(8));
  try {
    filter_apply(ComplexVec(16), cfg);
    FAIL();
  } catch (const DimensionError& e) {
    EXPECT_EQ(e.kind(), DimensionError::Kind::SizeMismatch);
  }
  EXPECT_THROW(filter_apply_naive(ComplexVec(4), cfg), DimensionError);
  EXPECT_THROW(oracle::circular_convolve(ComplexVec(4), ComplexVec(5)), DimensionError);
  EXPECT_THROW(FilterConfig::from_taps(ComplexVec(12)), DimensionError);
}

TEST(Filter, CountingDoesNotChangeResults) {
  std::mt19937 rng(4);
  const auto s = test_support::random_vec(rng, 256);
  const auto cfg = FilterConfig::from_taps(test_support::random_vec(rng, 256));
  FlopCounter c1, c2;
  EXPECT_EQ(filter_apply(s, cfg), filter_apply(s, cfg, &c1));
  EXPECT_EQ(filter_apply_naive(s, cfg), filter_apply_naive(s, cfg, &c2));
  // Two transforms of 128 * 8 butterflies at 2 fma each, plus 2 fma per spectral product.
  EXPECT_EQ(c1.total().fma, 2u * 128u * 8u * 2u + 2u * 256u);
  EXPECT_EQ(c2.total().fma, 0u);
}
