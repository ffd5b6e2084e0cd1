#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace rpslrepo::model {

struct TypeDecl {
  std::string name;
  std::optional<std::string> extends;

  friend bool operator==(const TypeDecl&, const TypeDecl&) = default;
};

enum class PortDirection { In, Out };

struct PortDecl {
  PortDirection direction = PortDirection::In;
  std::string name;
  std::string type_name;

  friend bool operator==(const PortDecl&, const PortDecl&) = default;
};

// Sensors have no inputs; processing components consume at least one input.
// Both produce at least one output.
enum class ComponentKind { Sensor, Processing };

struct ComponentDecl {
  std::string name;
  ComponentKind kind = ComponentKind::Sensor;
  std::vector<PortDecl> ports;

  const PortDecl* find_port(std::string_view port_name) const;

  friend bool operator==(const ComponentDecl&, const ComponentDecl&) = default;
};

struct InstanceDecl {
  std::string instance_name;
  std::string component_name;

  friend bool operator==(const InstanceDecl&, const InstanceDecl&) = default;
};

struct Connection {
  std::string src_instance;
  std::string src_port;
  std::string dst_instance;
  std::string dst_port;

  friend bool operator==(const Connection&, const Connection&) = default;
};

// A named DAG of component instances wired by typed port connections.
struct PerceptionGraphDecl {
  std::string name;
  std::vector<InstanceDecl> instances;
  std::vector<Connection> connections;

  friend bool operator==(const PerceptionGraphDecl&,
                         const PerceptionGraphDecl&) = default;
};

using Decl = std::variant<TypeDecl, ComponentDecl, PerceptionGraphDecl>;

std::string_view to_string(ComponentKind kind);   // "sensor" / "processing"
std::string_view to_string(PortDirection direction);  // "in" / "out"

}  // namespace rpslrepo::model
