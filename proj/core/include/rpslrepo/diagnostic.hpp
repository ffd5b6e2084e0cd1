#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace rpslrepo {

enum class Severity { Error, Warning };

enum class DiagCode {
  SyntaxError,
  CycleDetected,
  UnknownType,
  UnknownComponent,
  UnknownInstance,
  UnknownPort,
  DirectionMismatch,
  TypeMismatch,
  DuplicateName,
  UnconnectedInput,
  MultipleWriters,
  BadArity,
  UnboundVariable,
  MixedAggregates,
};

std::string_view to_string(DiagCode code);

// Position-carrying error report from a parser (line/column set) or from
// validation (decl_name/detail set).
struct Diagnostic {
  Severity severity = Severity::Error;
  DiagCode code = DiagCode::SyntaxError;
  std::string message;

  // Parse diagnostics: 1-based position into the named source.
  std::string source_name;
  int line = 0;
  int column = 0;

  // Validation diagnostics: the offending declaration and a short detail.
  std::string decl_name;
  std::string detail;

  // CycleDetected only: instance names forming a closed walk
  // (first == last, consecutive pairs are declared connections).
  std::vector<std::string> cycle_witness;

  bool has_position() const { return line > 0; }
};

// `sourceName:line:column: error[code]: message` for parse diagnostics,
// `error[code]: message` otherwise.
std::string render(const Diagnostic& diag, bool color = false);

// render() plus the offending source line with a caret under the column.
std::string render_with_caret(const Diagnostic& diag, std::string_view source,
                              bool color = false);

}  // namespace rpslrepo
