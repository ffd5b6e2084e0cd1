#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "rpslrepo/ids.hpp"
#include "rpslrepo/property_graph.hpp"
#include "rpslrepo/property_value.hpp"

namespace rpslrepo::query {

struct NodeRef {
  graph::NodeId id;

  friend bool operator==(NodeRef, NodeRef) = default;
};

struct NullValue {
  friend bool operator==(NullValue, NullValue) = default;
};

// A table cell: a node reference, a property value, a count, or null
// (projection of a property the node does not carry).
struct CellValue {
  std::variant<NodeRef, graph::PropertyValue, std::int64_t, NullValue> value;

  friend bool operator==(const CellValue&, const CellValue&) = default;
};

// Ordered, named-column query output. Row order is deterministic:
// lexicographic over the bound node ids in match-variable declaration
// order (aggregates produce a single row).
struct ResultTable {
  std::vector<std::string> columns;
  std::vector<std::vector<CellValue>> rows;

  friend bool operator==(const ResultTable&, const ResultTable&) = default;
};

// `(#<id>:<labels joined by :> {<props, lexicographic>})` for nodes,
// literal syntax for property values, plain decimal for counts, `null`
// for absent properties.
std::string render_cell(const CellValue& cell, const graph::PropertyGraph& store);

// Header line of column names separated by ` | `, then one row per line.
std::string render_table(const ResultTable& table,
                         const graph::PropertyGraph& store);

}  // namespace rpslrepo::query
