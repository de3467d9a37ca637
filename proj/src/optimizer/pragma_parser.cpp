// SPDX-License-Identifier: Apache-2.0

#include "optimizer/pragma_parser.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace optimizer {

namespace {

bool is_blank(char c) { return c == ' ' || c == '\t'; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && (is_blank(s.front()) || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (is_blank(s.back()) || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  auto alpha = [](char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_';
  };
  if (!alpha(s.front())) return false;
  return std::all_of(s.begin() + 1, s.end(),
                     [&](char c) { return alpha(c) || (c >= '0' && c <= '9'); });
}

std::vector<SourceLine> split_lines(std::string_view text, bool& trailing_newline) {
  std::vector<SourceLine> lines;
  trailing_newline = !text.empty() && text.back() == '\n';
  if (trailing_newline) text.remove_suffix(1);
  if (text.empty() && !trailing_newline) return lines;

  std::size_t start = 0;
  while (true) {
    const std::size_t nl = text.find('\n', start);
    const std::string_view body =
        text.substr(start, nl == std::string_view::npos ? std::string_view::npos : nl - start);
    SourceLine line;
    line.index = lines.size() + 1;
    line.text = std::string(body);
    std::size_t ws = 0;
    while (ws < body.size() && is_blank(body[ws])) ++ws;
    line.indent = std::string(body.substr(0, ws));
    lines.push_back(std::move(line));
    if (nl == std::string_view::npos) break;
    start = nl + 1;
  }
  return lines;
}

/// Content following a leading `///`, if any. A directive additionally needs
/// whitespace right after the slashes, which rules out `////`.
std::optional<std::string_view> triple_slash_content(const SourceLine& line) {
  std::string_view s(line.text);
  s.remove_prefix(line.indent.size());
  if (s.substr(0, 3) != "///") return std::nullopt;
  return s.substr(3);
}

struct RawDirective {
  DirectiveKind kind;
  std::string_view rest;  // text after the keyword
};

std::optional<RawDirective> match_directive(std::string_view content) {
  std::size_t i = 0;
  while (i < content.size() && is_blank(content[i])) ++i;
  if (i == 0) return std::nullopt;
  content.remove_prefix(i);
  if (content.substr(0, 6) != "PRAGMA") return std::nullopt;
  content.remove_prefix(6);
  if (content.empty() || !is_blank(content.front())) return std::nullopt;
  while (!content.empty() && is_blank(content.front())) content.remove_prefix(1);

  std::size_t end = 0;
  while (end < content.size() && !is_blank(content[end]) && content[end] != ',' &&
         content[end] != '\r')
    ++end;
  const std::string_view keyword = content.substr(0, end);
  const std::string_view rest = content.substr(end);
  if (keyword == "INCLUDES") return RawDirective{DirectiveKind::Includes, rest};
  if (keyword == "FUNCTIONS") return RawDirective{DirectiveKind::Functions, rest};
  if (keyword == "END") return RawDirective{DirectiveKind::End, rest};
  if (keyword == "BEGIN" && (rest.empty() || is_blank(rest.front())))
    return RawDirective{DirectiveKind::Begin, rest};
  return std::nullopt;
}

/// Splits a comma list; one trailing empty item (a trailing comma) is dropped.
/// `has_empty` reports any remaining empty item.
std::vector<std::string> split_params(std::string_view text, bool& has_empty) {
  std::vector<std::string> out;
  has_empty = false;
  if (trim(text).empty()) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    out.emplace_back(trim(text.substr(start, comma == std::string_view::npos
                                                 ? std::string_view::npos
                                                 : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (out.size() > 1 && out.back().empty()) out.pop_back();
  has_empty = std::any_of(out.begin(), out.end(), [](const auto& p) { return p.empty(); });
  return out;
}

}  // namespace

std::string_view to_string(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::UnbalancedEnd: return "UnbalancedEnd";
    case ParseErrorKind::UnclosedBegin: return "UnclosedBegin";
    case ParseErrorKind::NestedBegin: return "NestedBegin";
    case ParseErrorKind::AnchorInRegion: return "AnchorInRegion";
    case ParseErrorKind::DuplicateAnchor: return "DuplicateAnchor";
    case ParseErrorKind::MissingAnchor: return "MissingAnchor";
    case ParseErrorKind::EmptyKernelName: return "EmptyKernelName";
    case ParseErrorKind::EmptyParameter: return "EmptyParameter";
    case ParseErrorKind::InvalidKernelName: return "InvalidKernelName";
  }
  return "ParseError";
}

namespace {
std::string format_parse_error(ParseErrorKind kind, const std::string& path,
                               std::size_t line, const std::string& detail) {
  std::ostringstream os;
  os << path << ':' << line << ": error: " << to_string(kind) << ": " << detail;
  return os.str();
}
}  // namespace

ParseError::ParseError(ParseErrorKind kind, std::string path, std::size_t line,
                       const std::string& detail)
    : std::runtime_error(format_parse_error(kind, path, line, detail)),
      kind_(kind),
      path_(std::move(path)),
      line_(line) {}

std::vector<const PragmaRegion*> AnnotatedSource::regions() const {
  std::vector<const PragmaRegion*> out;
  for (const auto& e : elements)
    if (const auto* r = std::get_if<PragmaRegion>(&e)) out.push_back(r);
  return out;
}

AnnotatedSource parse(std::string_view source_text, std::string path) {
  AnnotatedSource doc;
  doc.path = std::move(path);
  const auto lines = split_lines(source_text, doc.trailing_newline);

  auto fail = [&](ParseErrorKind kind, std::size_t line, const std::string& detail) {
    throw ParseError(kind, doc.path, line, detail);
  };

  std::optional<PragmaRegion> open;
  std::optional<std::size_t> includes_line;
  std::optional<std::size_t> functions_line;

  for (const auto& line : lines) {
    const auto content = triple_slash_content(line);
    const auto directive = content ? match_directive(*content) : std::nullopt;

    if (open) {
      if (!content) {
        open->fallback_lines.push_back(line);
        continue;
      }
      if (!directive) {
        bool has_empty = false;
        PragmaDirective cont{DirectiveKind::Continuation, line, {},
                             split_params(*content, has_empty)};
        if (has_empty) fail(ParseErrorKind::EmptyParameter, line.index, "empty parameter in continuation");
        open->full_params.insert(open->full_params.end(), cont.params.begin(), cont.params.end());
        open->continuations.push_back(std::move(cont));
        continue;
      }
      switch (directive->kind) {
        case DirectiveKind::Begin:
          fail(ParseErrorKind::NestedBegin, line.index,
               "PRAGMA BEGIN while the region opened on line " +
                   std::to_string(open->begin.line.index) + " is still open");
          break;
        case DirectiveKind::Includes:
        case DirectiveKind::Functions:
          fail(ParseErrorKind::AnchorInRegion, line.index,
               "anchor directive inside the region opened on line " +
                   std::to_string(open->begin.line.index));
          break;
        case DirectiveKind::End:
          open->end = PragmaDirective{DirectiveKind::End, line, {}, {}};
          doc.elements.emplace_back(std::move(*open));
          open.reset();
          break;
        case DirectiveKind::Continuation:
          break;
      }
      continue;
    }

    if (!directive) {
      doc.elements.emplace_back(PassthroughLine{line});
      continue;
    }

    switch (directive->kind) {
      case DirectiveKind::Includes:
        if (includes_line)
          fail(ParseErrorKind::DuplicateAnchor, line.index,
               "second PRAGMA INCLUDES (first on line " + std::to_string(*includes_line) + ")");
        includes_line = line.index;
        doc.elements.emplace_back(IncludesAnchor{line});
        break;
      case DirectiveKind::Functions:
        if (functions_line)
          fail(ParseErrorKind::DuplicateAnchor, line.index,
               "second PRAGMA FUNCTIONS (first on line " + std::to_string(*functions_line) + ")");
        functions_line = line.index;
        doc.elements.emplace_back(FunctionsAnchor{line});
        break;
      case DirectiveKind::End:
        fail(ParseErrorKind::UnbalancedEnd, line.index, "PRAGMA END without an open region");
        break;
      case DirectiveKind::Begin: {
        bool has_empty = false;
        auto items = split_params(directive->rest, has_empty);
        if (items.empty() || items.front().empty())
          fail(ParseErrorKind::EmptyKernelName, line.index, "PRAGMA BEGIN without a kernel name");
        if (!is_identifier(items.front()))
          fail(ParseErrorKind::InvalidKernelName, line.index,
               "kernel name '" + items.front() + "' is not an identifier");
        if (has_empty) fail(ParseErrorKind::EmptyParameter, line.index, "empty parameter in PRAGMA BEGIN");

        PragmaRegion region;
        region.begin.kind = DirectiveKind::Begin;
        region.begin.line = line;
        region.begin.kernel_name = items.front();
        region.begin.params.assign(items.begin() + 1, items.end());
        region.full_params = region.begin.params;
        region.indent = line.indent;
        open = std::move(region);
        break;
      }
      case DirectiveKind::Continuation:
        break;
    }
  }

  if (open)
    fail(ParseErrorKind::UnclosedBegin, open->begin.line.index,
         "PRAGMA BEGIN '" + open->begin.kernel_name + "' is never closed");

  const auto regions = doc.regions();
  if (!regions.empty()) {
    const std::size_t first = regions.front()->begin.line.index;
    if (!includes_line || *includes_line > first)
      fail(ParseErrorKind::MissingAnchor, first,
           "PRAGMA INCLUDES must appear before the first PRAGMA BEGIN");
    if (!functions_line || *functions_line > first)
      fail(ParseErrorKind::MissingAnchor, first,
           "PRAGMA FUNCTIONS must appear before the first PRAGMA BEGIN");
  }
  return doc;
}

std::string reassemble(const AnnotatedSource& source) {
  std::vector<const SourceLine*> lines;
  for (const auto& e : source.elements) {
    std::visit(
        [&](const auto& el) {
          using T = std::decay_t<decltype(el)>;
          if constexpr (std::is_same_v<T, PragmaRegion>) {
            lines.push_back(&el.begin.line);
            for (const auto& c : el.continuations) lines.push_back(&c.line);
            for (const auto& f : el.fallback_lines) lines.push_back(&f);
            lines.push_back(&el.end.line);
          } else {
            lines.push_back(&el.line);
          }
        },
        e);
  }
  std::stable_sort(lines.begin(), lines.end(),
                   [](const SourceLine* a, const SourceLine* b) { return a->index < b->index; });
  std::string out;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (i) out += '\n';
    out += lines[i]->text;
  }
  if (source.trailing_newline) out += '\n';
  return out;
}

}  // namespace optimizer
