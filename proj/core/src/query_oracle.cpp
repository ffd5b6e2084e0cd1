#include "rpslrepo/query_oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <unordered_set>
#include <vector>

namespace rpslrepo::query {

namespace {

using graph::NodeId;
using graph::PropertyGraph;

// Total assignment: every variable (match-level or predicate-local) maps
// to a node id.
using Assignment = std::map<std::string, std::uint64_t>;

bool node_matches(const PropertyGraph& store, std::uint64_t id,
                  const NodePattern& pattern) {
  const graph::Node& node = store.node(NodeId{id});
  if (pattern.label && !node.labels.contains(*pattern.label)) return false;
  for (const auto& [name, literal] : pattern.prop_filter) {
    auto it = node.properties.find(name);
    if (it == node.properties.end() || !(it->second == literal)) return false;
  }
  return true;
}

bool edge_exists(const PropertyGraph& store, std::uint64_t src,
                 std::uint64_t dst, const std::string& rel_type) {
  for (const auto& [id, edge] : store.edges()) {
    if (edge.rel_type == rel_type && edge.src.value == src &&
        edge.dst.value == dst) {
      return true;
    }
  }
  return false;
}

bool path_holds(const PropertyGraph& store, const PathPattern& path,
                const Assignment& assignment) {
  for (std::size_t i = 0; i < path.nodes.size(); ++i) {
    std::uint64_t id = assignment.at(path.nodes[i].variable);
    if (!node_matches(store, id, path.nodes[i])) return false;
    if (i > 0) {
      const RelPattern& rel = path.rels[i - 1];
      std::uint64_t prev = assignment.at(path.nodes[i - 1].variable);
      std::uint64_t src = rel.direction == RelDirection::LeftToRight ? prev
                                                                     : id;
      std::uint64_t dst = rel.direction == RelDirection::LeftToRight ? id
                                                                     : prev;
      if (!edge_exists(store, src, dst, rel.rel_type)) return false;
    }
  }
  return true;
}

// Existential check: free variables of the path (those absent from the
// assignment) range over all store nodes.
bool path_satisfiable(const PropertyGraph& store, const PathPattern& path,
                      const Assignment& assignment,
                      const std::vector<std::uint64_t>& all_nodes) {
  std::vector<std::string> free_vars;
  for (const auto& node : path.nodes) {
    if (!assignment.contains(node.variable)) {
      free_vars.push_back(node.variable);
    }
  }
  std::sort(free_vars.begin(), free_vars.end());
  free_vars.erase(std::unique(free_vars.begin(), free_vars.end()),
                  free_vars.end());

  Assignment extended = assignment;
  std::vector<std::size_t> odometer(free_vars.size(), 0);
  while (true) {
    if (!free_vars.empty() && all_nodes.empty()) return false;
    for (std::size_t i = 0; i < free_vars.size(); ++i) {
      extended[free_vars[i]] = all_nodes[odometer[i]];
    }
    if (path_holds(store, path, extended)) return true;
    std::size_t pos = 0;
    while (pos < odometer.size()) {
      if (++odometer[pos] < all_nodes.size()) break;
      odometer[pos] = 0;
      ++pos;
    }
    if (pos == odometer.size()) return false;  // odometer wrapped
  }
}

bool where_holds(const PropertyGraph& store, const WhereExpr& expr,
                 const Assignment& assignment,
                 const std::vector<std::uint64_t>& all_nodes) {
  if (const auto* pattern = std::get_if<WhereExpr::Pattern>(&expr.node)) {
    return path_satisfiable(store, pattern->path, assignment, all_nodes);
  }
  if (const auto* cmp = std::get_if<WhereExpr::Compare>(&expr.node)) {
    const graph::Node& node =
        store.node(NodeId{assignment.at(cmp->variable)});
    auto it = node.properties.find(cmp->property);
    if (it == node.properties.end()) return false;
    bool equal = it->second == cmp->literal;
    return cmp->op == CompareOp::Eq ? equal : !equal;
  }
  if (const auto* conj = std::get_if<WhereExpr::And>(&expr.node)) {
    return where_holds(store, *conj->lhs, assignment, all_nodes) &&
           where_holds(store, *conj->rhs, assignment, all_nodes);
  }
  if (const auto* disj = std::get_if<WhereExpr::Or>(&expr.node)) {
    return where_holds(store, *disj->lhs, assignment, all_nodes) ||
           where_holds(store, *disj->rhs, assignment, all_nodes);
  }
  return !where_holds(store, *std::get<WhereExpr::Not>(expr.node).child,
                      assignment, all_nodes);
}

std::string oracle_row_key(const std::vector<CellValue>& row) {
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

ResultTable execute_oracle(const QueryAst& ast, const PropertyGraph& store) {
  const std::vector<std::string> vars = match_variables(ast);

  std::vector<std::uint64_t> all_nodes;
  all_nodes.reserve(store.node_count());
  for (const auto& [id, node] : store.nodes()) all_nodes.push_back(id.value);

  // All |V|^k assignments in ascending lexicographic order.
  std::vector<Assignment> kept;
  if (vars.empty() || !all_nodes.empty()) {
    std::vector<std::size_t> odometer(vars.size(), 0);
    while (true) {
      Assignment assignment;
      for (std::size_t i = 0; i < vars.size(); ++i) {
        assignment[vars[i]] = all_nodes[odometer[i]];
      }
      bool satisfied = true;
      for (const auto& pattern : ast.patterns) {
        if (!path_holds(store, pattern, assignment)) {
          satisfied = false;
          break;
        }
      }
      if (satisfied && ast.where) {
        satisfied = where_holds(store, *ast.where, assignment, all_nodes);
      }
      if (satisfied) kept.push_back(std::move(assignment));

      // Advance the most significant position last so assignments arrive
      // in ascending order of the (vars[0], vars[1], ...) tuple.
      if (vars.empty()) break;
      std::size_t pos = vars.size();
      while (pos > 0) {
        --pos;
        if (++odometer[pos] < all_nodes.size()) break;
        odometer[pos] = 0;
        if (pos == 0) {
          pos = static_cast<std::size_t>(-1);
          break;
        }
      }
      if (pos == static_cast<std::size_t>(-1)) break;
    }
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
        count = static_cast<std::int64_t>(kept.size());
      } else {
        for (const auto& assignment : kept) {
          if (assignment.at(item.variable) != 0) ++count;
        }
      }
      row.push_back(CellValue{count});
    }
    table.rows.push_back(std::move(row));
    return table;
  }

  std::unordered_set<std::string> seen;
  for (const auto& assignment : kept) {
    std::vector<CellValue> row;
    row.reserve(ast.ret.items.size());
    for (const auto& item : ast.ret.items) {
      NodeId id{assignment.at(item.variable)};
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
    if (ast.ret.distinct && !seen.insert(oracle_row_key(row)).second) {
      continue;
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace rpslrepo::query
