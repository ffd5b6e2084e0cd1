#include "rpslrepo/model.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace rpslrepo::model {

const PortDecl* ComponentDecl::find_port(std::string_view port_name) const {
  for (const auto& port : ports) {
    if (port.name == port_name) return &port;
  }
  return nullptr;
}

std::string_view to_string(ComponentKind kind) {
  return kind == ComponentKind::Sensor ? "sensor" : "processing";
}

std::string_view to_string(PortDirection direction) {
  return direction == PortDirection::In ? "in" : "out";
}

const TypeDecl* Model::find_type(std::string_view name) const {
  auto it = type_index.find(std::string(name));
  return it == type_index.end() ? nullptr : &types[it->second];
}

const ComponentDecl* Model::find_component(std::string_view name) const {
  auto it = component_index.find(std::string(name));
  return it == component_index.end() ? nullptr : &components[it->second];
}

const PerceptionGraphDecl* Model::find_graph(std::string_view name) const {
  auto it = graph_index.find(std::string(name));
  return it == graph_index.end() ? nullptr : &graphs[it->second];
}

namespace {

Diagnostic decl_error(DiagCode code, std::string decl_name,
                      std::string message, std::string detail = {}) {
  Diagnostic d;
  d.code = code;
  d.message = std::move(message);
  d.decl_name = std::move(decl_name);
  d.detail = std::move(detail);
  return d;
}

void check_component(const ComponentDecl& comp, const Model& model,
                     std::vector<Diagnostic>& out) {
  std::set<std::string_view> seen_ports;
  std::size_t ins = 0;
  std::size_t outs = 0;
  for (const auto& port : comp.ports) {
    if (!seen_ports.insert(port.name).second) {
      out.push_back(decl_error(DiagCode::DuplicateName, comp.name,
                               "component '" + comp.name +
                                   "' declares port '" + port.name +
                                   "' more than once",
                               port.name));
    }
    if (port.direction == PortDirection::In) {
      ++ins;
    } else {
      ++outs;
    }
    if (!model.find_type(port.type_name)) {
      out.push_back(decl_error(DiagCode::UnknownType, comp.name,
                               "port '" + comp.name + '.' + port.name +
                                   "' names unknown type '" + port.type_name +
                                   "'",
                               port.name));
    }
  }
  if (comp.kind == ComponentKind::Sensor && ins > 0) {
    out.push_back(decl_error(DiagCode::BadArity, comp.name,
                             "sensor '" + comp.name +
                                 "' may not declare 'in' ports"));
  }
  if (comp.kind == ComponentKind::Processing && ins == 0) {
    out.push_back(decl_error(DiagCode::BadArity, comp.name,
                             "processor '" + comp.name +
                                 "' needs at least one 'in' port"));
  }
  if (outs == 0) {
    out.push_back(decl_error(DiagCode::BadArity, comp.name,
                             std::string(to_string(comp.kind)) +
                                 " component '" + comp.name +
                                 "' needs at least one 'out' port"));
  }
}

// Reports one CycleDetected per extends cycle, each cycle once.
void check_extends_cycles(const Model& model, std::vector<Diagnostic>& out) {
  enum class Mark { White, Gray, Black };
  std::vector<Mark> marks(model.types.size(), Mark::White);

  for (std::size_t start = 0; start < model.types.size(); ++start) {
    if (marks[start] != Mark::White) continue;
    std::vector<std::size_t> chain;
    std::size_t cur = start;
    while (true) {
      marks[cur] = Mark::Gray;
      chain.push_back(cur);
      const auto& extends = model.types[cur].extends;
      if (!extends) break;
      auto it = model.type_index.find(*extends);
      if (it == model.type_index.end()) break;  // reported as UnknownType
      std::size_t next = it->second;
      if (marks[next] == Mark::Gray) {
        std::vector<std::string> witness;
        auto pos = std::find(chain.begin(), chain.end(), next);
        for (auto i = pos; i != chain.end(); ++i) {
          witness.push_back(model.types[*i].name);
        }
        witness.push_back(model.types[next].name);
        Diagnostic d = decl_error(
            DiagCode::CycleDetected, model.types[next].name,
            "type extends chain forms a cycle: " + [&] {
              std::string joined;
              for (const auto& name : witness) {
                if (!joined.empty()) joined += " -> ";
                joined += name;
              }
              return joined;
            }());
        d.cycle_witness = std::move(witness);
        out.push_back(std::move(d));
        break;
      }
      if (marks[next] == Mark::Black) break;
      cur = next;
    }
    for (std::size_t i : chain) marks[i] = Mark::Black;
  }
}

}  // namespace

BuildResult build_model(const std::vector<Decl>& decls) {
  BuildResult result;
  Model& model = result.model;

  for (const Decl& decl : decls) {
    if (const auto* type = std::get_if<TypeDecl>(&decl)) {
      if (!model.type_index.emplace(type->name, model.types.size()).second) {
        result.diagnostics.push_back(
            decl_error(DiagCode::DuplicateName, type->name,
                       "duplicate type '" + type->name + "'"));
        continue;
      }
      model.types.push_back(*type);
    } else if (const auto* comp = std::get_if<ComponentDecl>(&decl)) {
      if (!model.component_index.emplace(comp->name, model.components.size())
               .second) {
        result.diagnostics.push_back(
            decl_error(DiagCode::DuplicateName, comp->name,
                       "duplicate component '" + comp->name + "'"));
        continue;
      }
      model.components.push_back(*comp);
    } else {
      const auto& graph = std::get<PerceptionGraphDecl>(decl);
      if (!model.graph_index.emplace(graph.name, model.graphs.size()).second) {
        result.diagnostics.push_back(
            decl_error(DiagCode::DuplicateName, graph.name,
                       "duplicate graph '" + graph.name + "'"));
        continue;
      }
      model.graphs.push_back(graph);
    }
  }

  for (const auto& type : model.types) {
    if (type.extends && !model.find_type(*type.extends)) {
      result.diagnostics.push_back(
          decl_error(DiagCode::UnknownType, type.name,
                     "type '" + type.name + "' extends unknown type '" +
                         *type.extends + "'"));
    }
  }
  check_extends_cycles(model, result.diagnostics);

  for (const auto& comp : model.components) {
    check_component(comp, model, result.diagnostics);
  }

  return result;
}

bool type_conforms(const Model& model, std::string_view sub,
                   std::string_view super) {
  const TypeDecl* sub_type = model.find_type(sub);
  if (!sub_type) {
    throw ModelError(DiagCode::UnknownType,
                     "unknown type '" + std::string(sub) + "'");
  }
  if (!model.find_type(super)) {
    throw ModelError(DiagCode::UnknownType,
                     "unknown type '" + std::string(super) + "'");
  }
  // The extends relation is acyclic in a built model, so this terminates.
  const TypeDecl* cur = sub_type;
  while (cur) {
    if (cur->name == super) return true;
    if (!cur->extends) return false;
    cur = model.find_type(*cur->extends);
  }
  return false;
}

}  // namespace rpslrepo::model
