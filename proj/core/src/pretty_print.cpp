#include "rpslrepo/pretty_print.hpp"

namespace rpslrepo::dsl {

namespace {

using model::ComponentDecl;
using model::ComponentKind;
using model::Decl;
using model::PerceptionGraphDecl;
using model::PortDirection;
using model::TypeDecl;

void print_type(const TypeDecl& decl, std::string& out) {
  out += "type " + decl.name;
  if (decl.extends) out += " extends " + *decl.extends;
  out += ";\n";
}

void print_component(const ComponentDecl& decl, std::string& out) {
  out += decl.kind == ComponentKind::Sensor ? "sensor " : "processor ";
  out += decl.name + " {\n";
  for (const auto& port : decl.ports) {
    out += "  ";
    out += port.direction == PortDirection::In ? "in " : "out ";
    out += port.name + ": " + port.type_name + ";\n";
  }
  out += "}\n";
}

void print_graph(const PerceptionGraphDecl& decl, std::string& out) {
  out += "graph " + decl.name + " {\n";
  for (const auto& inst : decl.instances) {
    out += "  node " + inst.instance_name + ": " + inst.component_name +
           ";\n";
  }
  for (const auto& conn : decl.connections) {
    out += "  " + conn.src_instance + '.' + conn.src_port + " -> " +
           conn.dst_instance + '.' + conn.dst_port + ";\n";
  }
  out += "}\n";
}

}  // namespace

std::string pretty_print(const std::vector<Decl>& decls) {
  std::string out;
  for (const Decl& decl : decls) {
    if (const auto* type = std::get_if<TypeDecl>(&decl)) {
      print_type(*type, out);
    } else if (const auto* comp = std::get_if<ComponentDecl>(&decl)) {
      print_component(*comp, out);
    } else {
      print_graph(std::get<PerceptionGraphDecl>(decl), out);
    }
  }
  return out;
}

std::string pretty_print(const ParsedDocument& document) {
  return pretty_print(document.decls);
}

}  // namespace rpslrepo::dsl
