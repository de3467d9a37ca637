// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "optimizer/arch_profile.hpp"
#include "optimizer/candidate.hpp"
#include "optimizer/op_counts.hpp"

namespace optimizer {

struct CostEstimate {
  Rational cycles;
  std::string candidate_label;
};

class SelectionError : public std::runtime_error {
 public:
  enum class Kind { InadmissibleCandidate, NoAdmissibleCandidate, NoCandidates };
  SelectionError(Kind kind, const std::string& message) : std::runtime_error(message), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// A candidate that needs FMA cannot run on a profile without it.
bool is_admissible(const OpCounts& counts, const ArchProfile& arch);

/// Throughput-bound cycle estimate: the sum over op classes of
/// count * reciprocal throughput, in exact rational arithmetic.
CostEstimate estimate_cost(const OpCounts& counts, const ArchProfile& arch, std::string label = {});

struct Selection {
  std::size_t winner = 0;
  /// One entry per candidate, empty for inadmissible ones.
  std::vector<std::optional<CostEstimate>> estimates;
};

/// Cheapest admissible candidate; ties go to the earliest.
Selection select(const std::vector<Candidate>& candidates, const ArchProfile& arch);

}  // namespace optimizer
