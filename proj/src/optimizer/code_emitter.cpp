// SPDX-License-Identifier: Apache-2.0

#include "optimizer/code_emitter.hpp"

#include <set>

namespace optimizer {

namespace {

std::string rtrim(const std::string& s) {
  const auto end = s.find_last_not_of(" \t\r");
  return end == std::string::npos ? std::string{} : s.substr(0, end + 1);
}

void merge_lines(std::vector<std::string>& dest, std::set<std::string>& seen, const std::vector<std::string>& lines) {
  for (const auto& l : lines)
    if (seen.insert(rtrim(l)).second) dest.push_back(l);
}

// Helper code is compared as a whole block: individual lines such as `}`
// recur across unrelated definitions and must not be dropped.
void merge_block(std::vector<std::string>& dest, std::set<std::string>& seen, const std::vector<std::string>& lines) {
  std::string key;
  for (const auto& l : lines) key += rtrim(l) + '\n';
  while (!key.empty() && key.front() == '\n') key.erase(0, 1);
  while (key.size() > 1 && key[key.size() - 2] == '\n') key.pop_back();
  if (key.empty() || !seen.insert(key).second) return;
  dest.insert(dest.end(), lines.begin(), lines.end());
}

}  // namespace

RewritePlan make_rewrite_plan(AnnotatedSource source, std::vector<Candidate> winners) {
  const auto regions = source.regions();
  if (regions.size() != winners.size())
    throw PlanError("plan has " + std::to_string(winners.size()) + " winners for " + std::to_string(regions.size()) +
                    " regions");
  RewritePlan plan;
  std::set<std::string> seen_includes;
  std::set<std::string> seen_functions;
  for (const auto& w : winners) {
    if (w.fragment.body.empty()) throw PlanError("winner '" + w.label + "' has an empty body");
    merge_lines(plan.merged_includes, seen_includes, w.fragment.includes);
    merge_block(plan.merged_functions, seen_functions, w.fragment.functions);
  }
  plan.source = std::move(source);
  plan.region_winners = std::move(winners);
  return plan;
}

std::string emit(const RewritePlan& plan, const EmitOptions& options) {
  std::vector<std::string> out;
  const std::string& macro = options.guard_macro;

  auto anchor_block = [&](const std::vector<std::string>& lines) {
    if (!out.empty() && !out.back().empty()) out.emplace_back();
    out.push_back("#ifdef " + macro);
    out.insert(out.end(), lines.begin(), lines.end());
    out.emplace_back("#endif");
    out.emplace_back();
  };

  std::size_t region_no = 0;
  for (const auto& element : plan.source.elements) {
    if (const auto* p = std::get_if<PassthroughLine>(&element)) {
      out.push_back(p->line.text);
    } else if (std::holds_alternative<IncludesAnchor>(element)) {
      anchor_block(plan.merged_includes);
    } else if (std::holds_alternative<FunctionsAnchor>(element)) {
      anchor_block(plan.merged_functions);
    } else {
      const auto& region = std::get<PragmaRegion>(element);
      const Candidate& winner = plan.region_winners.at(region_no++);
      const std::string& indent = region.indent;
      out.push_back(indent + "#ifndef " + macro);
      for (const auto& f : region.fallback_lines) out.push_back(f.text);
      out.push_back(indent + "#else");
      for (const auto& b : winner.fragment.body)
        out.push_back(b.empty() ? std::string{} : indent + options.indent_unit + b);
      // Labelled with the 0-based index of the BEGIN line.
      out.push_back(indent + "#endif // PRAGMA BEGIN line " + std::to_string(region.begin.line.index - 1));
    }
  }

  std::string text;
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i) text += '\n';
    text += out[i];
  }
  if (plan.source.trailing_newline && !out.empty()) text += '\n';
  return text;
}

}  // namespace optimizer
