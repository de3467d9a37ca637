// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "optimizer/op_counts.hpp"

namespace optimizer {

/// Exact rational used for every cost computation.
using Rational = boost::multiprecision::cpp_rational;

/// Parses a non-negative decimal literal such as "0.5" or "3" exactly.
Rational parse_decimal(std::string_view text);

/// Decimal rendering when the value terminates within 6 places, `p/q` otherwise.
std::string format_rational(const Rational& value);

class ProfileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Throughput description of a target CPU.
struct ArchProfile {
  std::string name;
  unsigned vector_bits = 0;
  bool has_fma = false;
  std::map<OpClass, Rational> recip_throughput;

  const Rational& recip(OpClass c) const { return recip_throughput.at(c); }
};

/// Reads the `key=value` profile format. `origin` is used in diagnostics.
ArchProfile parse_arch_profile(std::string_view text, const std::string& origin = "<profile>");
ArchProfile load_arch_profile(const std::filesystem::path& path);

/// Resolves `--arch`: an existing file path, or `<name>.profile` in one of
/// the search directories, first match wins.
ArchProfile resolve_arch_profile(const std::string& name_or_path,
                                 const std::vector<std::filesystem::path>& search_dirs);

}  // namespace optimizer
