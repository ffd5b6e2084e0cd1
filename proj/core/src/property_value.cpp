#include "rpslrepo/property_value.hpp"

namespace rpslrepo::graph {

std::string escape_text(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default: out += c; break;
    }
  }
  return out;
}

std::string to_literal(const PropertyValue& value) {
  switch (value.kind()) {
    case PropertyValue::Kind::Text:
      return '"' + escape_text(value.text()) + '"';
    case PropertyValue::Kind::Int:
      return std::to_string(value.integer());
    case PropertyValue::Kind::Bool:
      return value.boolean() ? "true" : "false";
  }
  return {};
}

}  // namespace rpslrepo::graph
