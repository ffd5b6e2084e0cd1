#pragma once

// Hand-rolled generators and independent oracles shared by the unit and
// acceptance suites. Everything here is deterministic given the seed.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rpslrepo/decl.hpp"
#include "rpslrepo/property_graph.hpp"

namespace testsupport {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  int range(int lo, int hi) {  // inclusive
    return std::uniform_int_distribution<int>(lo, hi)(engine_);
  }
  bool chance(double p) {
    return std::uniform_real_distribution<double>(0.0, 1.0)(engine_) < p;
  }
  template <class T>
  const T& pick(const std::vector<T>& pool) {
    return pool[static_cast<std::size_t>(range(0, int(pool.size()) - 1))];
  }
  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

// ---------------------------------------------------------------------------
// Random stores for query testing.

inline rpslrepo::graph::PropertyGraph random_store(Rng& rng,
                                                   int max_nodes = 7,
                                                   int max_edges = 12) {
  using rpslrepo::graph::NodeId;
  using rpslrepo::graph::PropertyMap;
  using rpslrepo::graph::PropertyValue;

  const std::vector<std::string> labels = {"A", "B", "C"};
  const std::vector<std::string> rel_types = {"r", "s"};

  rpslrepo::graph::PropertyGraph store;
  int n = rng.range(0, max_nodes);
  std::vector<NodeId> ids;
  for (int i = 0; i < n; ++i) {
    std::set<std::string> node_labels;
    node_labels.insert(rng.pick(labels));
    if (rng.chance(0.3)) node_labels.insert(rng.pick(labels));
    PropertyMap props;
    if (rng.chance(0.6)) props.emplace("p", PropertyValue(rng.range(0, 2)));
    if (rng.chance(0.4)) {
      props.emplace("q", rng.chance(0.5) ? PropertyValue("x")
                                         : PropertyValue("y"));
    }
    if (rng.chance(0.2)) props.emplace("b", PropertyValue(rng.chance(0.5)));
    ids.push_back(store.create_node(std::move(node_labels), std::move(props)));
  }
  if (!ids.empty()) {
    int m = rng.range(0, max_edges);
    for (int i = 0; i < m; ++i) {
      store.create_edge(rng.pick(ids), rng.pick(rel_types), rng.pick(ids),
                        {});
    }
  }
  return store;
}

// ---------------------------------------------------------------------------
// Random query text. The generator emits only grammatical queries whose
// where/return variables are bound by the match clause.

struct QueryShape {
  bool has_not = false;
  bool aggregated = false;
};

namespace detail {

inline std::string random_literal(Rng& rng) {
  switch (rng.range(0, 3)) {
    case 0: return std::to_string(rng.range(0, 2));
    case 1: return rng.chance(0.5) ? "\"x\"" : "\"y\"";
    case 2: return rng.chance(0.5) ? "true" : "false";
    default: return std::to_string(rng.range(-2, 5));
  }
}

inline std::string random_node_pattern(Rng& rng,
                                       std::vector<std::string>& named) {
  std::string out = "(";
  if (!rng.chance(0.2)) {
    std::string var = "n" + std::to_string(rng.range(0, 2));
    out += var;
    if (std::find(named.begin(), named.end(), var) == named.end()) {
      named.push_back(var);
    }
  }
  if (rng.chance(0.6)) {
    const std::vector<std::string> labels = {"A", "B", "C", "Nope"};
    out += ':' + rng.pick(labels);
  }
  if (rng.chance(0.35)) {
    out += " {";
    const std::vector<std::string> props = {"p", "q", "b"};
    int k = rng.range(1, 2);
    for (int i = 0; i < k; ++i) {
      if (i) out += ", ";
      out += rng.pick(props) + ": " + random_literal(rng);
    }
    out += '}';
  }
  out += ')';
  return out;
}

inline std::string random_rel(Rng& rng) {
  const std::vector<std::string> rels = {"r", "s", "t"};
  std::string type = rng.pick(rels);
  return rng.chance(0.5) ? "-[:" + type + "]->" : "<-[:" + type + "]-";
}

inline std::string random_where_expr(Rng& rng,
                                     const std::vector<std::string>& named,
                                     int depth, QueryShape& shape) {
  if (depth > 0 && rng.chance(0.45)) {
    std::string lhs = random_where_expr(rng, named, depth - 1, shape);
    std::string rhs = random_where_expr(rng, named, depth - 1, shape);
    return '(' + lhs + (rng.chance(0.5) ? " and " : " or ") + rhs + ')';
  }
  if (rng.chance(0.25)) {
    shape.has_not = true;
    return "not " + random_where_expr(rng, named, 0, shape);
  }
  if (!named.empty() && rng.chance(0.5)) {
    const std::vector<std::string> props = {"p", "q", "b", "z"};
    return rng.pick(named) + '.' + rng.pick(props) +
           (rng.chance(0.5) ? " = " : " <> ") + random_literal(rng);
  }
  // Pattern predicate: endpoints are bound variables or anonymous nodes.
  auto endpoint = [&]() -> std::string {
    if (!named.empty() && rng.chance(0.6)) {
      return '(' + rng.pick(named) + ')';
    }
    const std::vector<std::string> labels = {"A", "B", ""};
    std::string label = rng.pick(labels);
    return label.empty() ? "()" : "(:" + label + ')';
  };
  return endpoint() + random_rel(rng) + endpoint();
}

}  // namespace detail

inline std::string random_query_text(Rng& rng, QueryShape& shape) {
  shape = QueryShape{};
  std::vector<std::string> named;

  std::string text = "match ";
  int patterns = rng.range(1, 2);
  for (int p = 0; p < patterns; ++p) {
    if (p) text += ", ";
    int nodes = rng.range(1, 3);
    // Guarantee at least one named variable in the first pattern.
    std::string first = detail::random_node_pattern(rng, named);
    if (p == 0 && named.empty()) {
      first = "(n0" + first.substr(1);
      named.push_back("n0");
    }
    text += first;
    for (int i = 1; i < nodes; ++i) {
      text += detail::random_rel(rng);
      text += detail::random_node_pattern(rng, named);
    }
  }

  if (rng.chance(0.6)) {
    text += " where " + detail::random_where_expr(rng, named, 2, shape);
  }

  text += " return ";
  if (rng.chance(0.25)) {
    shape.aggregated = true;
    if (rng.chance(0.5) || named.empty()) {
      text += "count(*)";
    } else {
      text += "count(" + rng.pick(named) + ')';
    }
  } else {
    if (rng.chance(0.4)) text += "distinct ";
    int items = rng.range(1, 2);
    for (int i = 0; i < items; ++i) {
      if (i) text += ", ";
      const std::string& var = rng.pick(named);
      if (rng.chance(0.4)) {
        const std::vector<std::string> props = {"p", "q", "z"};
        text += var + '.' + rng.pick(props);
      } else {
        text += var;
      }
    }
  }
  if (rng.chance(0.5)) text += ';';
  return text;
}

// ---------------------------------------------------------------------------
// Random DSL documents (declaration records plus a deliberately messy
// rendering) for parser round-trip properties.

inline std::string random_identifier(Rng& rng, const std::string& prefix) {
  std::string out = prefix + std::to_string(rng.range(0, 999));
  if (rng.chance(0.3)) out += "_x";
  return out;
}

inline std::vector<rpslrepo::model::Decl> random_document(Rng& rng) {
  using namespace rpslrepo::model;
  std::vector<Decl> decls;
  int count = rng.range(0, 6);
  for (int i = 0; i < count; ++i) {
    switch (rng.range(0, 2)) {
      case 0: {
        TypeDecl type;
        type.name = random_identifier(rng, "Ty");
        if (rng.chance(0.4)) type.extends = random_identifier(rng, "Ty");
        decls.emplace_back(std::move(type));
        break;
      }
      case 1: {
        ComponentDecl comp;
        comp.name = random_identifier(rng, "Comp");
        comp.kind = rng.chance(0.5) ? ComponentKind::Sensor
                                    : ComponentKind::Processing;
        int ports = rng.range(0, 4);
        for (int p = 0; p < ports; ++p) {
          PortDecl port;
          port.direction = rng.chance(0.5) ? PortDirection::In
                                           : PortDirection::Out;
          port.name = random_identifier(rng, "p");
          port.type_name = random_identifier(rng, "Ty");
          comp.ports.push_back(std::move(port));
        }
        decls.emplace_back(std::move(comp));
        break;
      }
      default: {
        PerceptionGraphDecl graph;
        graph.name = random_identifier(rng, "g");
        int instances = rng.range(0, 4);
        for (int k = 0; k < instances; ++k) {
          graph.instances.push_back(
              {random_identifier(rng, "inst"), random_identifier(rng, "Comp")});
        }
        int conns = rng.range(0, 3);
        for (int k = 0; k < conns; ++k) {
          graph.connections.push_back({random_identifier(rng, "inst"),
                                       random_identifier(rng, "p"),
                                       random_identifier(rng, "inst"),
                                       random_identifier(rng, "p")});
        }
        decls.emplace_back(std::move(graph));
        break;
      }
    }
  }
  return decls;
}

// Renders decls with random whitespace and comments; the token sequence is
// what the grammar requires, the layout is noise.
inline std::string messy_render(Rng& rng,
                                const std::vector<rpslrepo::model::Decl>& decls) {
  using namespace rpslrepo::model;
  std::string out;
  auto pad = [&] {
    switch (rng.range(0, 5)) {
      case 0: out += ' '; break;
      case 1: out += "  "; break;
      case 2: out += '\n'; break;
      case 3: out += "\t"; break;
      case 4: out += " # noise comment\n"; break;
      default: out += ' '; break;
    }
  };
  auto word = [&](std::string_view w) {
    out += w;
    pad();
  };
  auto punct = [&](std::string_view p) {
    if (rng.chance(0.4)) pad();
    out += p;
    if (rng.chance(0.6)) pad();
  };

  for (const Decl& decl : decls) {
    if (const auto* type = std::get_if<TypeDecl>(&decl)) {
      word("type");
      word(type->name);
      if (type->extends) {
        word("extends");
        word(*type->extends);
      }
      punct(";");
    } else if (const auto* comp = std::get_if<ComponentDecl>(&decl)) {
      word(comp->kind == ComponentKind::Sensor ? "sensor" : "processor");
      word(comp->name);
      punct("{");
      for (const auto& port : comp->ports) {
        word(port.direction == PortDirection::In ? "in" : "out");
        word(port.name);
        punct(":");
        word(port.type_name);
        punct(";");
      }
      punct("}");
    } else {
      const auto& graph = std::get<PerceptionGraphDecl>(decl);
      word("graph");
      word(graph.name);
      punct("{");
      for (const auto& inst : graph.instances) {
        word("node");
        word(inst.instance_name);
        punct(":");
        word(inst.component_name);
        punct(";");
      }
      for (const auto& conn : graph.connections) {
        word(conn.src_instance);
        punct(".");
        word(conn.src_port);
        punct("->");
        word(conn.dst_instance);
        punct(".");
        word(conn.dst_port);
        punct(";");
      }
      punct("}");
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Random DAG perception-graph declarations, an independent topological-sort
// oracle, and a cycle-creating back-edge injection.

struct DagCase {
  std::vector<rpslrepo::model::Decl> decls;
  std::string graph_name;
  std::size_t instance_count = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

// Instances are wired so that every generated graph is structurally valid:
// each incoming edge gets its own 'in' port, sensors are exactly the
// sources, every port is of the single type T.
inline DagCase random_dag(Rng& rng, int max_instances = 12) {
  using namespace rpslrepo::model;
  DagCase result;
  std::size_t n = static_cast<std::size_t>(rng.range(2, max_instances));
  result.instance_count = n;
  result.graph_name = "g";

  // Random topological order, then forward edges only.
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng.engine());
  std::vector<std::size_t> position(n);
  for (std::size_t i = 0; i < n; ++i) position[order[i]] = i;

  int m = rng.range(1, int(2 * n));
  std::set<std::pair<std::size_t, std::size_t>> edge_set;
  for (int e = 0; e < m; ++e) {
    std::size_t a = static_cast<std::size_t>(rng.range(0, int(n) - 1));
    std::size_t b = static_cast<std::size_t>(rng.range(0, int(n) - 1));
    if (a == b) continue;
    if (position[a] > position[b]) std::swap(a, b);
    edge_set.insert({a, b});
  }
  if (edge_set.empty()) {
    std::size_t first = order[0];
    std::size_t second = order[1];
    edge_set.insert({first, second});
  }
  result.edges.assign(edge_set.begin(), edge_set.end());

  std::vector<std::size_t> in_degree(n, 0);
  std::vector<std::size_t> out_degree(n, 0);
  for (auto [src, dst] : result.edges) {
    ++out_degree[src];
    ++in_degree[dst];
  }

  result.decls.emplace_back(TypeDecl{"T", std::nullopt});

  PerceptionGraphDecl graph;
  graph.name = result.graph_name;
  for (std::size_t i = 0; i < n; ++i) {
    ComponentDecl comp;
    comp.name = "Comp" + std::to_string(i);
    comp.kind = in_degree[i] == 0 ? ComponentKind::Sensor
                                  : ComponentKind::Processing;
    for (std::size_t p = 0; p < in_degree[i]; ++p) {
      comp.ports.push_back(
          {PortDirection::In, "i" + std::to_string(p), "T"});
    }
    std::size_t outs = std::max<std::size_t>(1, out_degree[i]);
    for (std::size_t p = 0; p < outs; ++p) {
      comp.ports.push_back(
          {PortDirection::Out, "o" + std::to_string(p), "T"});
    }
    result.decls.emplace_back(std::move(comp));
    graph.instances.push_back({"inst" + std::to_string(i),
                               "Comp" + std::to_string(i)});
  }

  std::vector<std::size_t> next_in(n, 0);
  std::vector<std::size_t> next_out(n, 0);
  for (auto [src, dst] : result.edges) {
    graph.connections.push_back(
        {"inst" + std::to_string(src), "o" + std::to_string(next_out[src]++),
         "inst" + std::to_string(dst), "i" + std::to_string(next_in[dst]++)});
  }
  result.decls.emplace_back(std::move(graph));
  return result;
}

// Kahn's algorithm; independent of validate_graph. Returns a complete
// topological order or nullopt if none exists.
inline std::optional<std::vector<std::size_t>> topo_sort_oracle(
    std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  std::vector<std::vector<std::size_t>> adj(n);
  std::vector<std::size_t> in_degree(n, 0);
  for (auto [src, dst] : edges) {
    adj[src].push_back(dst);
    ++in_degree[dst];
  }
  std::queue<std::size_t> ready;
  for (std::size_t i = 0; i < n; ++i) {
    if (in_degree[i] == 0) ready.push(i);
  }
  std::vector<std::size_t> order;
  while (!ready.empty()) {
    std::size_t v = ready.front();
    ready.pop();
    order.push_back(v);
    for (std::size_t next : adj[v]) {
      if (--in_degree[next] == 0) ready.push(next);
    }
  }
  if (order.size() != n) return std::nullopt;
  return order;
}

// Picks (i, j) with a path i -> ... -> j and injects the connection j -> i,
// closing a cycle. The target component gains an 'in' port (a sensor
// becomes a processor), the source an 'out' port.
inline DagCase inject_back_edge(Rng& rng, const DagCase& base) {
  using namespace rpslrepo::model;
  DagCase result = base;

  std::vector<std::vector<std::size_t>> adj(base.instance_count);
  for (auto [src, dst] : base.edges) adj[src].push_back(dst);
  std::vector<std::pair<std::size_t, std::size_t>> reachable;
  for (std::size_t start = 0; start < base.instance_count; ++start) {
    std::vector<bool> seen(base.instance_count, false);
    std::queue<std::size_t> frontier;
    frontier.push(start);
    while (!frontier.empty()) {
      std::size_t v = frontier.front();
      frontier.pop();
      for (std::size_t next : adj[v]) {
        if (!seen[next]) {
          seen[next] = true;
          reachable.emplace_back(start, next);
          frontier.push(next);
        }
      }
    }
  }
  auto [from, to] = reachable[static_cast<std::size_t>(
      rng.range(0, int(reachable.size()) - 1))];

  for (auto& decl : result.decls) {
    auto* comp = std::get_if<ComponentDecl>(&decl);
    if (!comp) continue;
    if (comp->name == "Comp" + std::to_string(to)) {
      comp->ports.push_back({PortDirection::Out, "back_o", "T"});
    }
    if (comp->name == "Comp" + std::to_string(from)) {
      comp->ports.push_back({PortDirection::In, "back_i", "T"});
      comp->kind = ComponentKind::Processing;
    }
  }
  for (auto& decl : result.decls) {
    auto* graph = std::get_if<PerceptionGraphDecl>(&decl);
    if (!graph) continue;
    graph->connections.push_back({"inst" + std::to_string(to), "back_o",
                                  "inst" + std::to_string(from), "back_i"});
  }
  result.edges.emplace_back(to, from);
  return result;
}

// ---------------------------------------------------------------------------
// Fuzz inputs: arbitrary bytes, sometimes mutations of a valid document.

inline std::string random_bytes(Rng& rng, int max_len = 200) {
  int len = rng.range(0, max_len);
  std::string out;
  out.reserve(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) {
    out += static_cast<char>(rng.range(0, 255));
  }
  return out;
}

inline std::string mutate_text(Rng& rng, std::string text) {
  int mutations = rng.range(1, 8);
  for (int i = 0; i < mutations && !text.empty(); ++i) {
    std::size_t pos =
        static_cast<std::size_t>(rng.range(0, int(text.size()) - 1));
    switch (rng.range(0, 2)) {
      case 0: text[pos] = static_cast<char>(rng.range(0, 255)); break;
      case 1: text.erase(pos, 1); break;
      default:
        text.insert(pos, 1, static_cast<char>(rng.range(0, 255)));
        break;
    }
  }
  return text;
}

}  // namespace testsupport
