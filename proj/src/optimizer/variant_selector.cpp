// SPDX-License-Identifier: Apache-2.0

#include "optimizer/variant_selector.hpp"

namespace optimizer {

bool is_admissible(const OpCounts& counts, const ArchProfile& arch) { return arch.has_fma || counts.fma == 0; }

CostEstimate estimate_cost(const OpCounts& counts, const ArchProfile& arch, std::string label) {
  if (!is_admissible(counts, arch))
    throw SelectionError(SelectionError::Kind::InadmissibleCandidate,
                         "candidate '" + label + "' uses fma but profile '" + arch.name + "' has no FMA unit");
  CostEstimate est{0, std::move(label)};
  for (auto c : kOpClasses) est.cycles += Rational(counts[c]) * arch.recip(c);
  return est;
}

Selection select(const std::vector<Candidate>& candidates, const ArchProfile& arch) {
  if (candidates.empty()) throw SelectionError(SelectionError::Kind::NoCandidates, "no candidates to select from");
  Selection sel;
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const auto& c = candidates[i];
    if (!is_admissible(c.op_counts, arch)) {
      sel.estimates.emplace_back();
      continue;
    }
    sel.estimates.push_back(estimate_cost(c.op_counts, arch, c.label));
    if (!best || sel.estimates[i]->cycles < sel.estimates[*best]->cycles) best = i;
  }
  if (!best)
    throw SelectionError(SelectionError::Kind::NoAdmissibleCandidate,
                         "no candidate is admissible on profile '" + arch.name + "'");
  sel.winner = *best;
  return sel;
}

}  // namespace optimizer
