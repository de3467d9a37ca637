// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace dsp {

using cf32 = std::complex<float>;

/// Thrown when operand shapes or sizes do not fit together.
class DimensionError : public std::invalid_argument {
 public:
  enum class Kind { SizeMismatch, DimMismatch, NonPowerOfTwo };
  DimensionError(Kind kind, const std::string& message) : std::invalid_argument(message), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// Interleaved (re, im) single-precision samples.
class ComplexVec {
 public:
  ComplexVec() = default;
  explicit ComplexVec(std::size_t n) : data_(n) {}
  ComplexVec(std::initializer_list<cf32> init) : data_(init) {}
  explicit ComplexVec(std::vector<cf32> data) : data_(std::move(data)) {}

  std::size_t size() const noexcept { return data_.size(); }
  bool empty() const noexcept { return data_.empty(); }

  cf32& operator[](std::size_t i) { return data_[i]; }
  const cf32& operator[](std::size_t i) const { return data_[i]; }

  std::span<cf32> samples() noexcept { return data_; }
  std::span<const cf32> samples() const noexcept { return data_; }

  /// The 2n floats backing the samples, re/im alternating.
  std::span<float> interleaved() noexcept { return {reinterpret_cast<float*>(data_.data()), 2 * data_.size()}; }
  std::span<const float> interleaved() const noexcept {
    return {reinterpret_cast<const float*>(data_.data()), 2 * data_.size()};
  }

  auto begin() noexcept { return data_.begin(); }
  auto end() noexcept { return data_.end(); }
  auto begin() const noexcept { return data_.begin(); }
  auto end() const noexcept { return data_.end(); }

  bool operator==(const ComplexVec&) const = default;

 private:
  std::vector<cf32> data_;
};

/// Row-major complex matrix, interleaved storage.
class ComplexMat {
 public:
  ComplexMat() = default;
  ComplexMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  cf32& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const cf32& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<cf32> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const cf32> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  std::span<const float> interleaved() const noexcept {
    return {reinterpret_cast<const float*>(data_.data()), 2 * data_.size()};
  }

  bool operator==(const ComplexMat&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cf32> data_;
};

/// Test-vector text format: one `<re> <im>` pair per line.
ComplexVec read_complex_text(std::istream& in);
void write_complex_text(std::ostream& out, const ComplexVec& v);

}  // namespace dsp
