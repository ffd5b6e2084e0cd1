#include "rpslrepo/diagnostic.hpp"

#include <sstream>

namespace rpslrepo {

std::string_view to_string(DiagCode code) {
  switch (code) {
    case DiagCode::SyntaxError: return "SyntaxError";
    case DiagCode::CycleDetected: return "CycleDetected";
    case DiagCode::UnknownType: return "UnknownType";
    case DiagCode::UnknownComponent: return "UnknownComponent";
    case DiagCode::UnknownInstance: return "UnknownInstance";
    case DiagCode::UnknownPort: return "UnknownPort";
    case DiagCode::DirectionMismatch: return "DirectionMismatch";
    case DiagCode::TypeMismatch: return "TypeMismatch";
    case DiagCode::DuplicateName: return "DuplicateName";
    case DiagCode::UnconnectedInput: return "UnconnectedInput";
    case DiagCode::MultipleWriters: return "MultipleWriters";
    case DiagCode::BadArity: return "BadArity";
    case DiagCode::UnboundVariable: return "UnboundVariable";
    case DiagCode::MixedAggregates: return "MixedAggregates";
  }
  return "Unknown";
}

namespace {

constexpr std::string_view kRed = "\x1b[31m";
constexpr std::string_view kYellow = "\x1b[33m";
constexpr std::string_view kReset = "\x1b[0m";

void append_tag(std::string& out, const Diagnostic& diag, bool color) {
  const bool warning = diag.severity == Severity::Warning;
  if (color) out += warning ? kYellow : kRed;
  out += warning ? "warning[" : "error[";
  out += to_string(diag.code);
  out += ']';
  if (color) out += kReset;
}

}  // namespace

std::string render(const Diagnostic& diag, bool color) {
  std::string out;
  if (diag.has_position()) {
    out += diag.source_name;
    out += ':';
    out += std::to_string(diag.line);
    out += ':';
    out += std::to_string(diag.column);
    out += ": ";
  }
  append_tag(out, diag, color);
  out += ": ";
  out += diag.message;
  return out;
}

std::string render_with_caret(const Diagnostic& diag, std::string_view source,
                              bool color) {
  std::string out = render(diag, color);
  if (!diag.has_position()) return out;

  std::istringstream lines{std::string(source)};
  std::string text;
  for (int i = 0; i < diag.line && std::getline(lines, text); ++i) {
  }
  out += "\n  ";
  out += text;
  out += "\n  ";
  out.append(diag.column > 0 ? diag.column - 1 : 0, ' ');
  out += '^';
  return out;
}

}  // namespace rpslrepo
