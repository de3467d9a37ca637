// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cmath>
#include <cstdint>

#include "optimizer/op_counts.hpp"

namespace dsp {

using optimizer::OpClass;
using optimizer::OpCounts;

/// Where in a kernel an operation was issued. Prologue holds layout and
/// initialisation passes, Inner the per-element loop nest, Epilogue the
/// final write-back.
enum class Phase { Prologue, Inner, Epilogue };

/// Accumulates per-class operation counts while an instrumented kernel runs.
class FlopCounter {
 public:
  void set_phase(Phase p) { phase_ = p; }
  void count(OpClass c, std::uint64_t n = 1) {
    total_[c] += n;
    phases_[static_cast<std::size_t>(phase_)][c] += n;
  }

  const OpCounts& total() const { return total_; }
  const OpCounts& phase(Phase p) const { return phases_[static_cast<std::size_t>(p)]; }

 private:
  Phase phase_ = Phase::Inner;
  OpCounts total_;
  std::array<OpCounts, 3> phases_;
};

/// Counting policy that compiles away; used for uninstrumented runs.
struct NullCounter {
  void set_phase(Phase) {}
  void count(OpClass, std::uint64_t = 1) {}
};

// Counted arithmetic primitives. Both counters run exactly these expressions,
// so instrumentation cannot change results.
template <class C>
inline float mul(C& c, float a, float b) {
  c.count(OpClass::Mul);
  return a * b;
}
template <class C>
inline float add(C& c, float a, float b) {
  c.count(OpClass::Add);
  return a + b;
}
template <class C>
inline float sub(C& c, float a, float b) {
  c.count(OpClass::Add);
  return a - b;
}
/// a*b + acc, single rounding.
template <class C>
inline float fma(C& c, float a, float b, float acc) {
  c.count(OpClass::Fma);
  return std::fma(a, b, acc);
}
/// acc - a*b, single rounding.
template <class C>
inline float fnma(C& c, float a, float b, float acc) {
  c.count(OpClass::Fma);
  return std::fma(-a, b, acc);
}

}  // namespace dsp
