// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "optimizer/op_counts.hpp"

namespace optimizer {

/// Code produced by a building-block generator for one region.
struct GeneratedFragment {
  std::vector<std::string> includes;
  std::vector<std::string> functions;
  std::vector<std::string> body;  // never empty

  bool operator==(const GeneratedFragment&) const = default;
};

struct Candidate {
  std::string label;
  GeneratedFragment fragment;
  OpCounts op_counts;

  bool operator==(const Candidate&) const = default;
};

// Candidate stream markers. A generator prints, for every candidate:
//
//   === CANDIDATE <label> ===
//   ;; ops fma=<n> mul=<n> add=<n> perm=<n> load=<n> store=<n>
//   --- INCLUDES ---
//   ...
//   --- FUNCTIONS ---
//   ...
//   --- BODY ---
//   ...
inline constexpr std::string_view kCandidatePrefix = "=== CANDIDATE ";
inline constexpr std::string_view kCandidateSuffix = " ===";
inline constexpr std::string_view kOpsPrefix = ";; ops";
inline constexpr std::string_view kIncludesMarker = "--- INCLUDES ---";
inline constexpr std::string_view kFunctionsMarker = "--- FUNCTIONS ---";
inline constexpr std::string_view kBodyMarker = "--- BODY ---";

class MalformedStream : public std::runtime_error {
 public:
  MalformedStream(std::size_t line, const std::string& detail);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Parses generator output. Zero candidates is not an error at this level.
std::vector<Candidate> parse_candidate_stream(std::string_view text);

void write_candidate_stream(std::ostream& out, const std::vector<Candidate>& candidates);

}  // namespace optimizer
