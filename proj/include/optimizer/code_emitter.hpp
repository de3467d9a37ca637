// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "optimizer/candidate.hpp"
#include "optimizer/pragma_parser.hpp"

namespace optimizer {

inline constexpr const char* kDefaultGuardMacro = "OPTIMIZER_ACTIVATED";

struct EmitOptions {
  std::string guard_macro = kDefaultGuardMacro;
  std::string indent_unit = "    ";
};

/// A parsed source plus the chosen candidate for each of its regions.
struct RewritePlan {
  AnnotatedSource source;
  std::vector<Candidate> region_winners;  // parallel to source.regions()
  std::vector<std::string> merged_includes;
  std::vector<std::string> merged_functions;
};

class PlanError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Builds a plan, merging includes and helper functions across winners in
/// region order. Include lines equal up to trailing whitespace are kept once;
/// a winner's helper block is dropped when an identical block was already kept.
RewritePlan make_rewrite_plan(AnnotatedSource source, std::vector<Candidate> winners);

/// Renders the rewritten file: anchors become guarded include/function
/// blocks and each region becomes an #ifndef/#else/#endif pair holding the
/// original lines and the winner's body.
std::string emit(const RewritePlan& plan, const EmitOptions& options = {});

}  // namespace optimizer
