// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace optimizer {

/// One physical line of the input, without its terminator.
struct SourceLine {
  std::size_t index = 0;  // 1-based
  std::string text;
  std::string indent;

  bool operator==(const SourceLine&) const = default;
};

enum class DirectiveKind { Includes, Functions, Begin, End, Continuation };

struct PragmaDirective {
  DirectiveKind kind = DirectiveKind::Continuation;
  SourceLine line;
  std::string kernel_name;          // Begin only
  std::vector<std::string> params;  // Begin and Continuation

  bool operator==(const PragmaDirective&) const = default;
};

struct PragmaRegion {
  PragmaDirective begin;
  PragmaDirective end;
  std::vector<PragmaDirective> continuations;
  std::vector<SourceLine> fallback_lines;
  std::vector<std::string> full_params;
  std::string indent;

  const std::string& kernel_name() const { return begin.kernel_name; }

  bool operator==(const PragmaRegion&) const = default;
};

struct PassthroughLine {
  SourceLine line;
  bool operator==(const PassthroughLine&) const = default;
};
struct IncludesAnchor {
  SourceLine line;
  bool operator==(const IncludesAnchor&) const = default;
};
struct FunctionsAnchor {
  SourceLine line;
  bool operator==(const FunctionsAnchor&) const = default;
};

using SourceElement =
    std::variant<PassthroughLine, IncludesAnchor, FunctionsAnchor, PragmaRegion>;

struct AnnotatedSource {
  std::string path;
  std::vector<SourceElement> elements;
  bool trailing_newline = false;

  std::vector<const PragmaRegion*> regions() const;

  bool operator==(const AnnotatedSource&) const = default;
};

enum class ParseErrorKind {
  UnbalancedEnd,
  UnclosedBegin,
  NestedBegin,
  AnchorInRegion,
  DuplicateAnchor,
  MissingAnchor,
  EmptyKernelName,
  EmptyParameter,
  InvalidKernelName,
};

std::string_view to_string(ParseErrorKind kind);

class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, std::string path, std::size_t line,
             const std::string& detail);

  ParseErrorKind kind() const noexcept { return kind_; }
  const std::string& path() const noexcept { return path_; }
  std::size_t line() const noexcept { return line_; }

 private:
  ParseErrorKind kind_;
  std::string path_;
  std::size_t line_;
};

/// Parses pragma-annotated C/C++ text. Only `///`-prefixed lines are
/// interpreted; everything else is carried through verbatim.
AnnotatedSource parse(std::string_view source_text, std::string path);

/// Every line of the model in original order, joined back into text.
/// For any successfully parsed input this reproduces the input bytes.
std::string reassemble(const AnnotatedSource& source);

}  // namespace optimizer
