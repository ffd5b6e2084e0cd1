#include "rpslrepo/query_engine.hpp"

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace rpslrepo::query {

namespace {

using graph::Edge;
using graph::EdgeId;
using graph::NodeId;
using graph::PropertyGraph;

// Partial assignment of match variables to node ids; 0 means unbound.
using Binding = std::vector<std::uint64_t>;

bool node_satisfies(const PropertyGraph& store, NodeId id,
                    const NodePattern& pattern) {
  const graph::Node& node = store.node(id);
  if (pattern.label && !node.labels.contains(*pattern.label)) return false;
  for (const auto& [name, literal] : pattern.prop_filter) {
    auto it = node.properties.find(name);
    if (it == node.properties.end() || !(it->second == literal)) return false;
  }
  return true;
}

class Matcher {
 public:
  Matcher(const PropertyGraph& store,
          const std::unordered_map<std::string, std::size_t>& var_index)
      : store_(store), var_index_(var_index) {}

  // Extends `binding` with all matches of `path`, emitting each completed
  // binding into `out`.
  void enumerate(const PathPattern& path, Binding binding,
                 std::set<Binding>& out) const {
    seed(path, binding, 0, [&](const Binding& full) {
      out.insert(full);
      return true;  // keep enumerating
    });
  }

  // True iff `path` can be satisfied under `binding`; variables local to
  // the path (anonymous predicate nodes) are existentially quantified.
  bool satisfiable(const PathPattern& path, const Binding& binding) const {
    bool found = false;
    Binding scratch = binding;
    seed(path, scratch, 0, [&](const Binding&) {
      found = true;
      return false;  // short-circuit
    });
    return found;
  }

 private:
  // Emit returns false to stop the search.
  template <class Emit>
  bool seed(const PathPattern& path, Binding& binding, std::size_t node_idx,
            const Emit& emit) const {
    const NodePattern& pattern = path.nodes[node_idx];
    std::uint64_t bound = lookup(binding, pattern.variable);
    if (bound != 0) {
      if (!node_satisfies(store_, NodeId{bound}, pattern)) return true;
      return walk(path, binding, node_idx, NodeId{bound}, emit);
    }
    if (pattern.label) {
      for (NodeId id : store_.nodes_by_label(*pattern.label)) {
        if (!node_satisfies(store_, id, pattern)) continue;
        if (!step_into(path, binding, node_idx, id, emit)) return false;
      }
      return true;
    }
    for (const auto& [id, node] : store_.nodes()) {
      if (!node_satisfies(store_, id, pattern)) continue;
      if (!step_into(path, binding, node_idx, id, emit)) return false;
    }
    return true;
  }

  template <class Emit>
  bool step_into(const PathPattern& path, Binding& binding,
                 std::size_t node_idx, NodeId id, const Emit& emit) const {
    const std::string& var = path.nodes[node_idx].variable;
    std::size_t slot = slot_of(var);
    bool newly_bound = slot != kNoSlot && binding[slot] == 0;
    if (newly_bound) binding[slot] = id.value;
    bool keep_going = walk(path, binding, node_idx, id, emit);
    if (newly_bound) binding[slot] = 0;
    return keep_going;
  }

  // Continue along the path from the node at node_idx, already bound to id.
  template <class Emit>
  bool walk(const PathPattern& path, Binding& binding, std::size_t node_idx,
            NodeId id, const Emit& emit) const {
    if (node_idx + 1 == path.nodes.size()) return emit(binding);

    const RelPattern& rel = path.rels[node_idx];
    const NodePattern& next = path.nodes[node_idx + 1];
    const bool forward = rel.direction == RelDirection::LeftToRight;
    const auto& edge_ids =
        forward ? store_.out_edge_ids(id) : store_.in_edge_ids(id);

    std::uint64_t next_bound = lookup(binding, next.variable);
    for (EdgeId edge_id : edge_ids) {
      const Edge& edge = store_.edge(edge_id);
      if (edge.rel_type != rel.rel_type) continue;
      NodeId neighbor = forward ? edge.dst : edge.src;
      if (next_bound != 0) {
        if (neighbor.value != next_bound) continue;
        if (!node_satisfies(store_, neighbor, next)) continue;
        if (!walk(path, binding, node_idx + 1, neighbor, emit)) return false;
      } else {
        if (!node_satisfies(store_, neighbor, next)) continue;
        if (!step_into(path, binding, node_idx + 1, neighbor, emit)) {
          return false;
        }
      }
    }
    return true;
  }

  static constexpr std::size_t kNoSlot = static_cast<std::size_t>(-1);

  std::size_t slot_of(const std::string& var) const {
    auto it = var_index_.find(var);
    return it == var_index_.end() ? kNoSlot : it->second;
  }

  std::uint64_t lookup(const Binding& binding, const std::string& var) const {
    std::size_t slot = slot_of(var);
    return slot == kNoSlot ? 0 : binding[slot];
  }

  const PropertyGraph& store_;
  const std::unordered_map<std::string, std::size_t>& var_index_;
};

class WhereEvaluator {
 public:
  WhereEvaluator(const PropertyGraph& store, const Matcher& matcher,
                 const std::unordered_map<std::string, std::size_t>& var_index)
      : store_(store), matcher_(matcher), var_index_(var_index) {}

  bool eval(const WhereExpr& expr, const Binding& binding) const {
    if (const auto* pattern = std::get_if<WhereExpr::Pattern>(&expr.node)) {
      return matcher_.satisfiable(pattern->path, binding);
    }
    if (const auto* cmp = std::get_if<WhereExpr::Compare>(&expr.node)) {
      return eval_compare(*cmp, binding);
    }
    if (const auto* conj = std::get_if<WhereExpr::And>(&expr.node)) {
      return eval(*conj->lhs, binding) && eval(*conj->rhs, binding);
    }
    if (const auto* disj = std::get_if<WhereExpr::Or>(&expr.node)) {
      return eval(*disj->lhs, binding) || eval(*disj->rhs, binding);
    }
    return !eval(*std::get<WhereExpr::Not>(expr.node).child, binding);
  }

 private:
  bool eval_compare(const WhereExpr::Compare& cmp,
                    const Binding& binding) const {
    std::uint64_t bound = binding[var_index_.at(cmp.variable)];
    const graph::Node& node = store_.node(NodeId{bound});
    auto it = node.properties.find(cmp.property);
    if (it == node.properties.end()) return false;  // missing: always false
    bool equal = it->second == cmp.literal;
    return cmp.op == CompareOp::Eq ? equal : !equal;
  }

  const PropertyGraph& store_;
  const Matcher& matcher_;
  const std::unordered_map<std::string, std::size_t>& var_index_;
};

std::string row_key(const std::vector<CellValue>& row) {
  std::string key;
  for (const CellValue& cell : row) {
    if (const auto* node = std::get_if<NodeRef>(&cell.value)) {
      key += 'N' + std::to_string(node->id.value);
    } else if (const auto* value =
                   std::get_if<graph::PropertyValue>(&cell.value)) {
      key += 'P' + std::to_string(static_cast<int>(value->kind())) + ':' +
             graph::to_literal(*value);
    } else if (const auto* count = std::get_if<std::int64_t>(&cell.value)) {
      key += 'C' + std::to_string(*count);
    } else {
      key += '0';
    }
    key += '|';
  }
  return key;
}

}  // namespace

ResultTable execute(const QueryAst& ast, const PropertyGraph& store) {
  const std::vector<std::string> vars = match_variables(ast);
  std::unordered_map<std::string, std::size_t> var_index;
  for (std::size_t i = 0; i < vars.size(); ++i) var_index[vars[i]] = i;

  Matcher matcher(store, var_index);

  // Nested-loop join: each pattern extends the binding set, constrained by
  // variables already bound. std::set both dedupes (bindings are node
  // tuples, not path enumerations) and sorts rows into output order.
  std::set<Binding> bindings;
  bindings.insert(Binding(vars.size(), 0));
  for (const auto& pattern : ast.patterns) {
    std::set<Binding> extended;
    for (const Binding& binding : bindings) {
      matcher.enumerate(pattern, binding, extended);
    }
    bindings = std::move(extended);
  }

  std::vector<Binding> filtered;
  if (ast.where) {
    WhereEvaluator where(store, matcher, var_index);
    for (const Binding& binding : bindings) {
      if (where.eval(*ast.where, binding)) filtered.push_back(binding);
    }
  } else {
    filtered.assign(bindings.begin(), bindings.end());
  }

  ResultTable table;
  for (const auto& item : ast.ret.items) {
    table.columns.push_back(item.column_name());
  }

  const bool aggregated = !ast.ret.items.empty() &&
                          ast.ret.items.front().is_aggregate();
  if (aggregated) {
    std::vector<CellValue> row;
    for (const auto& item : ast.ret.items) {
      std::int64_t count = 0;
      if (item.kind == ReturnItem::Kind::CountStar) {
        count = static_cast<std::int64_t>(filtered.size());
      } else {
        for (const Binding& binding : filtered) {
          if (binding[var_index.at(item.variable)] != 0) ++count;
        }
      }
      row.push_back(CellValue{count});
    }
    table.rows.push_back(std::move(row));
    return table;
  }

  std::unordered_set<std::string> seen;
  for (const Binding& binding : filtered) {
    std::vector<CellValue> row;
    row.reserve(ast.ret.items.size());
    for (const auto& item : ast.ret.items) {
      NodeId id{binding[var_index.at(item.variable)]};
      if (item.kind == ReturnItem::Kind::Variable) {
        row.push_back(CellValue{NodeRef{id}});
      } else {
        const auto& props = store.node(id).properties;
        auto it = props.find(item.property);
        if (it == props.end()) {
          row.push_back(CellValue{NullValue{}});
        } else {
          row.push_back(CellValue{it->second});
        }
      }
    }
    if (ast.ret.distinct && !seen.insert(row_key(row)).second) continue;
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace rpslrepo::query
