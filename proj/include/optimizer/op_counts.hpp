// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <string_view>

namespace optimizer {

enum class OpClass { Fma, Mul, Add, Perm, Load, Store };

inline constexpr std::array<OpClass, 6> kOpClasses = {
    OpClass::Fma, OpClass::Mul, OpClass::Add, OpClass::Perm, OpClass::Load, OpClass::Store};

constexpr std::string_view to_string(OpClass c) {
  switch (c) {
    case OpClass::Fma: return "fma";
    case OpClass::Mul: return "mul";
    case OpClass::Add: return "add";
    case OpClass::Perm: return "perm";
    case OpClass::Load: return "load";
    case OpClass::Store: return "store";
  }
  return "";
}

/// Dynamic instruction counts for one execution of a region, by class.
struct OpCounts {
  std::uint64_t fma = 0;
  std::uint64_t mul = 0;
  std::uint64_t add = 0;
  std::uint64_t perm = 0;
  std::uint64_t load = 0;
  std::uint64_t store = 0;

  std::uint64_t& operator[](OpClass c) {
    switch (c) {
      case OpClass::Fma: return fma;
      case OpClass::Mul: return mul;
      case OpClass::Add: return add;
      case OpClass::Perm: return perm;
      case OpClass::Load: return load;
      case OpClass::Store: return store;
    }
    return fma;
  }
  std::uint64_t operator[](OpClass c) const { return const_cast<OpCounts&>(*this)[c]; }

  /// Arithmetic work with an fma weighted as two flops.
  std::uint64_t flops() const { return mul + add + 2 * fma; }

  OpCounts& operator+=(const OpCounts& o) {
    for (auto c : kOpClasses) (*this)[c] += o[c];
    return *this;
  }
  friend OpCounts operator+(OpCounts a, const OpCounts& b) { return a += b; }

  bool operator==(const OpCounts&) const = default;
};

}  // namespace optimizer
