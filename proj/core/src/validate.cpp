#include "rpslrepo/validate.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace rpslrepo::model {

namespace {

Diagnostic graph_error(DiagCode code, const PerceptionGraphDecl& graph,
                       std::string message, std::string detail = {}) {
  Diagnostic d;
  d.code = code;
  d.message = "graph '" + graph.name + "': " + std::move(message);
  d.decl_name = graph.name;
  d.detail = std::move(detail);
  return d;
}

std::string port_ref(const Connection& conn, bool src) {
  return src ? conn.src_instance + '.' + conn.src_port
             : conn.dst_instance + '.' + conn.dst_port;
}

// DFS over the instance digraph; every back edge yields one witness walk.
class CycleFinder {
 public:
  CycleFinder(std::size_t n,
              const std::vector<std::vector<std::size_t>>& adjacency)
      : adjacency_(adjacency), marks_(n, Mark::White) {}

  std::vector<std::vector<std::size_t>> find() {
    for (std::size_t v = 0; v < marks_.size(); ++v) {
      if (marks_[v] == Mark::White) visit(v);
    }
    return cycles_;
  }

 private:
  enum class Mark { White, Gray, Black };

  void visit(std::size_t v) {
    marks_[v] = Mark::Gray;
    stack_.push_back(v);
    for (std::size_t next : adjacency_[v]) {
      if (marks_[next] == Mark::Gray) {
        auto pos = std::find(stack_.begin(), stack_.end(), next);
        std::vector<std::size_t> cycle(pos, stack_.end());
        cycle.push_back(next);
        cycles_.push_back(std::move(cycle));
      } else if (marks_[next] == Mark::White) {
        visit(next);
      }
    }
    stack_.pop_back();
    marks_[v] = Mark::Black;
  }

  const std::vector<std::vector<std::size_t>>& adjacency_;
  std::vector<Mark> marks_;
  std::vector<std::size_t> stack_;
  std::vector<std::vector<std::size_t>> cycles_;
};

}  // namespace

std::vector<Diagnostic> validate_graph(const PerceptionGraphDecl& graph,
                                       const Model& model) {
  std::vector<Diagnostic> diags;

  // Instance table; duplicates keep their first binding.
  std::map<std::string, std::size_t> instance_index;
  for (std::size_t i = 0; i < graph.instances.size(); ++i) {
    const auto& inst = graph.instances[i];
    if (!instance_index.emplace(inst.instance_name, i).second) {
      diags.push_back(graph_error(DiagCode::DuplicateName, graph,
                                  "duplicate instance '" +
                                      inst.instance_name + "'",
                                  inst.instance_name));
    }
  }

  std::vector<const ComponentDecl*> resolved(graph.instances.size(), nullptr);
  for (std::size_t i = 0; i < graph.instances.size(); ++i) {
    const auto& inst = graph.instances[i];
    resolved[i] = model.find_component(inst.component_name);
    if (!resolved[i]) {
      diags.push_back(graph_error(DiagCode::UnknownComponent, graph,
                                  "instance '" + inst.instance_name +
                                      "' names unknown component '" +
                                      inst.component_name + "'",
                                  inst.instance_name));
    }
  }

  // Port-level checks per connection; structurally sound connections feed
  // the wiring and cycle analyses below.
  struct ResolvedConn {
    std::size_t src = 0;
    std::size_t dst = 0;
    const Connection* conn = nullptr;
    const PortDecl* src_port = nullptr;
    const PortDecl* dst_port = nullptr;
  };
  std::vector<ResolvedConn> sound;

  for (const auto& conn : graph.connections) {
    bool endpoint_ok = true;
    auto resolve_instance = [&](const std::string& name) -> std::size_t {
      auto it = instance_index.find(name);
      if (it == instance_index.end()) {
        diags.push_back(graph_error(DiagCode::UnknownInstance, graph,
                                    "connection references unknown instance '" +
                                        name + "'",
                                    name));
        endpoint_ok = false;
        return 0;
      }
      return it->second;
    };
    std::size_t src = resolve_instance(conn.src_instance);
    std::size_t dst = resolve_instance(conn.dst_instance);
    if (!endpoint_ok) continue;

    ResolvedConn rc;
    rc.src = src;
    rc.dst = dst;
    rc.conn = &conn;

    auto resolve_port = [&](std::size_t inst, const std::string& port_name,
                            bool is_src) -> const PortDecl* {
      const ComponentDecl* comp = resolved[inst];
      if (!comp) return nullptr;  // already reported as UnknownComponent
      const PortDecl* port = comp->find_port(port_name);
      if (!port) {
        diags.push_back(graph_error(
            DiagCode::UnknownPort, graph,
            "component '" + comp->name + "' has no port '" + port_name +
                "' (referenced as " + port_ref(conn, is_src) + ")",
            port_ref(conn, is_src)));
      }
      return port;
    };
    rc.src_port = resolve_port(src, conn.src_port, true);
    rc.dst_port = resolve_port(dst, conn.dst_port, false);

    if (rc.src_port && rc.src_port->direction != PortDirection::Out) {
      diags.push_back(graph_error(DiagCode::DirectionMismatch, graph,
                                  "connection source " + port_ref(conn, true) +
                                      " is an 'in' port",
                                  port_ref(conn, true)));
      rc.src_port = nullptr;
    }
    if (rc.dst_port && rc.dst_port->direction != PortDirection::In) {
      diags.push_back(graph_error(DiagCode::DirectionMismatch, graph,
                                  "connection destination " +
                                      port_ref(conn, false) +
                                      " is an 'out' port",
                                  port_ref(conn, false)));
      rc.dst_port = nullptr;
    }

    if (rc.src_port && rc.dst_port &&
        !type_conforms(model, rc.src_port->type_name,
                       rc.dst_port->type_name)) {
      diags.push_back(graph_error(
          DiagCode::TypeMismatch, graph,
          port_ref(conn, true) + " produces '" + rc.src_port->type_name +
              "' which does not conform to '" + rc.dst_port->type_name +
              "' expected by " + port_ref(conn, false),
          port_ref(conn, true) + " -> " + port_ref(conn, false)));
    }

    sound.push_back(rc);
  }

  // Input wiring: every 'in' port connected by exactly one writer.
  std::map<std::pair<std::size_t, std::string>, std::size_t> writers;
  for (const auto& rc : sound) {
    if (!rc.dst_port) continue;
    ++writers[{rc.dst, rc.conn->dst_port}];
  }
  for (const auto& [key, count] : writers) {
    if (count > 1) {
      const auto& inst = graph.instances[key.first];
      diags.push_back(graph_error(DiagCode::MultipleWriters, graph,
                                  "input " + inst.instance_name + '.' +
                                      key.second + " has " +
                                      std::to_string(count) + " writers",
                                  inst.instance_name + '.' + key.second));
    }
  }
  for (std::size_t i = 0; i < graph.instances.size(); ++i) {
    const ComponentDecl* comp = resolved[i];
    if (!comp) continue;
    if (instance_index.at(graph.instances[i].instance_name) != i) {
      continue;  // duplicate instance name, only the first binding counts
    }
    for (const auto& port : comp->ports) {
      if (port.direction != PortDirection::In) continue;
      if (!writers.contains({i, port.name})) {
        diags.push_back(graph_error(DiagCode::UnconnectedInput, graph,
                                    "input " + graph.instances[i].instance_name +
                                        '.' + port.name + " is never connected",
                                    graph.instances[i].instance_name + '.' +
                                        port.name));
      }
    }
  }

  // Acyclicity of the instance-level connection graph.
  std::vector<std::vector<std::size_t>> adjacency(graph.instances.size());
  for (const auto& rc : sound) adjacency[rc.src].push_back(rc.dst);
  for (const auto& cycle :
       CycleFinder(graph.instances.size(), adjacency).find()) {
    std::vector<std::string> witness;
    witness.reserve(cycle.size());
    for (std::size_t idx : cycle) {
      witness.push_back(graph.instances[idx].instance_name);
    }
    std::string joined;
    for (const auto& name : witness) {
      if (!joined.empty()) joined += " -> ";
      joined += name;
    }
    Diagnostic d = graph_error(DiagCode::CycleDetected, graph,
                               "instances form a cycle: " + joined, joined);
    d.cycle_witness = std::move(witness);
    diags.push_back(std::move(d));
  }

  return diags;
}

std::vector<Diagnostic> validate_all(const Model& model) {
  std::vector<Diagnostic> diags;
  for (const auto& graph : model.graphs) {
    auto graph_diags = validate_graph(graph, model);
    diags.insert(diags.end(),
                 std::make_move_iterator(graph_diags.begin()),
                 std::make_move_iterator(graph_diags.end()));
  }
  return diags;
}

}  // namespace rpslrepo::model
