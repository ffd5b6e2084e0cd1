#pragma once

#include <concepts>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <variant>

namespace rpslrepo::graph {

// One property value: UTF-8 text, 64-bit signed integer, or boolean.
// Values compare equal only when kind and payload both match; nothing in
// the store or the query language coerces across kinds.
class PropertyValue {
 public:
  enum class Kind { Text, Int, Bool };

  PropertyValue() = default;
  PropertyValue(std::string value) : data_(std::move(value)) {}
  PropertyValue(std::string_view value) : data_(std::string(value)) {}
  PropertyValue(const char* value) : data_(std::string(value)) {}
  PropertyValue(bool value) : data_(value) {}
  PropertyValue(std::int64_t value) : data_(value) {}
  template <std::integral T>
    requires(!std::same_as<T, bool> && !std::same_as<T, std::int64_t>)
  PropertyValue(T value) : data_(static_cast<std::int64_t>(value)) {}

  Kind kind() const {
    switch (data_.index()) {
      case 0: return Kind::Text;
      case 1: return Kind::Int;
      default: return Kind::Bool;
    }
  }
  bool is_text() const { return std::holds_alternative<std::string>(data_); }
  bool is_int() const { return std::holds_alternative<std::int64_t>(data_); }
  bool is_bool() const { return std::holds_alternative<bool>(data_); }

  const std::string& text() const { return std::get<std::string>(data_); }
  std::int64_t integer() const { return std::get<std::int64_t>(data_); }
  bool boolean() const { return std::get<bool>(data_); }

  friend bool operator==(const PropertyValue&, const PropertyValue&) = default;

 private:
  std::variant<std::string, std::int64_t, bool> data_{std::int64_t{0}};
};

using PropertyMap = std::map<std::string, PropertyValue>;

// Literal-style rendering: text quoted and escaped, integers plain,
// booleans true/false. The query parser accepts exactly this escape set.
std::string escape_text(std::string_view text);
std::string to_literal(const PropertyValue& value);

}  // namespace rpslrepo::graph
