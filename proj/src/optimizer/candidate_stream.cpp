// SPDX-License-Identifier: Apache-2.0

#include "optimizer/candidate.hpp"

#include <charconv>
#include <optional>
#include <ostream>
#include <set>

namespace optimizer {

MalformedStream::MalformedStream(std::size_t line, const std::string& detail)
    : std::runtime_error("line " + std::to_string(line) + ": " + detail), line_(line) {}

namespace {

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  auto alpha = [](char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_'; };
  if (!alpha(s.front())) return false;
  for (char c : s.substr(1))
    if (!alpha(c) && !(c >= '0' && c <= '9')) return false;
  return true;
}

bool is_marker_like(std::string_view line) {
  return line.rfind(kCandidatePrefix, 0) == 0 || line.rfind(kOpsPrefix, 0) == 0 ||
         line == kIncludesMarker || line == kFunctionsMarker || line == kBodyMarker;
}

OpCounts parse_ops_line(std::string_view line, std::size_t lineno) {
  if (line.rfind(";; ops ", 0) != 0) throw MalformedStream(lineno, "expected ';; ops' line");
  line.remove_prefix(7);
  OpCounts counts;
  std::set<OpClass> seen;
  std::size_t pos = 0;
  while (pos <= line.size()) {
    const std::size_t space = line.find(' ', pos);
    const std::string_view item = line.substr(pos, space == std::string_view::npos ? std::string_view::npos : space - pos);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) throw MalformedStream(lineno, "bad ops item '" + std::string(item) + "'");
    const std::string_view key = item.substr(0, eq);
    const std::string_view value = item.substr(eq + 1);
    std::optional<OpClass> op;
    for (auto c : kOpClasses)
      if (to_string(c) == key) op = c;
    if (!op) throw MalformedStream(lineno, "unknown op class '" + std::string(key) + "'");
    if (!seen.insert(*op).second) throw MalformedStream(lineno, "duplicate op class '" + std::string(key) + "'");
    std::uint64_t n = 0;
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), n);
    if (value.empty() || ec != std::errc{} || ptr != value.data() + value.size())
      throw MalformedStream(lineno, "op count for '" + std::string(key) + "' is not a non-negative integer");
    counts[*op] = n;
    if (space == std::string_view::npos) break;
    pos = space + 1;
  }
  if (seen.size() != kOpClasses.size()) throw MalformedStream(lineno, "ops line must list all six op classes");
  return counts;
}

}  // namespace

std::vector<Candidate> parse_candidate_stream(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    const std::size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }

  std::vector<Candidate> out;
  std::set<std::string> labels;
  std::size_t i = 0;

  while (i < lines.size()) {
    const std::size_t header_line = i + 1;
    const std::string_view header = lines[i];
    if (header.rfind(kCandidatePrefix, 0) != 0 || header.size() < kCandidatePrefix.size() + kCandidateSuffix.size() ||
        header.substr(header.size() - kCandidateSuffix.size()) != kCandidateSuffix)
      throw MalformedStream(header_line, "expected '=== CANDIDATE <label> ===' header");
    const std::string label(header.substr(kCandidatePrefix.size(),
                                          header.size() - kCandidatePrefix.size() - kCandidateSuffix.size()));
    if (!is_identifier(label)) throw MalformedStream(header_line, "candidate label '" + label + "' is not an identifier");
    if (!labels.insert(label).second) throw MalformedStream(header_line, "duplicate candidate label '" + label + "'");

    Candidate cand;
    cand.label = label;
    if (i + 1 >= lines.size()) throw MalformedStream(header_line + 1, "missing ';; ops' line");
    cand.op_counts = parse_ops_line(lines[i + 1], i + 2);
    i += 2;

    auto read_section = [&](std::string_view marker, std::vector<std::string>& dest,
                            std::optional<std::string_view> terminator) {
      if (i >= lines.size() || lines[i] != marker)
        throw MalformedStream(i + 1, "expected '" + std::string(marker) + "'");
      ++i;
      while (i < lines.size()) {
        const std::string_view l = lines[i];
        if (terminator ? l == *terminator : l.rfind(kCandidatePrefix, 0) == 0) break;
        if (is_marker_like(l)) throw MalformedStream(i + 1, "unexpected marker '" + std::string(l) + "'");
        dest.emplace_back(l);
        ++i;
      }
    };
    read_section(kIncludesMarker, cand.fragment.includes, kFunctionsMarker);
    read_section(kFunctionsMarker, cand.fragment.functions, kBodyMarker);
    const std::size_t body_line = i + 1;
    read_section(kBodyMarker, cand.fragment.body, std::nullopt);
    if (cand.fragment.body.empty()) throw MalformedStream(body_line, "candidate '" + label + "' has an empty body");
    out.push_back(std::move(cand));
  }
  return out;
}

void write_candidate_stream(std::ostream& out, const std::vector<Candidate>& candidates) {
  for (const auto& c : candidates) {
    out << kCandidatePrefix << c.label << kCandidateSuffix << '\n' << kOpsPrefix;
    for (auto op : kOpClasses) out << ' ' << to_string(op) << '=' << c.op_counts[op];
    out << '\n' << kIncludesMarker << '\n';
    for (const auto& l : c.fragment.includes) out << l << '\n';
    out << kFunctionsMarker << '\n';
    for (const auto& l : c.fragment.functions) out << l << '\n';
    out << kBodyMarker << '\n';
    for (const auto& l : c.fragment.body) out << l << '\n';
  }
}

}  // namespace optimizer
