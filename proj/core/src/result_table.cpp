#include "rpslrepo/result_table.hpp"

namespace rpslrepo::query {

namespace {

std::string render_node(graph::NodeId id, const graph::PropertyGraph& store) {
  const graph::Node& node = store.node(id);
  std::string out = "(#" + std::to_string(id.value) + ':';
  bool first = true;
  for (const auto& label : node.labels) {
    if (!first) out += ':';
    out += label;
    first = false;
  }
  out += " {";
  first = true;
  for (const auto& [name, value] : node.properties) {
    if (!first) out += ", ";
    out += name + ": " + graph::to_literal(value);
    first = false;
  }
  out += "})";
  return out;
}

}  // namespace

std::string render_cell(const CellValue& cell,
                        const graph::PropertyGraph& store) {
  if (const auto* node = std::get_if<NodeRef>(&cell.value)) {
    return render_node(node->id, store);
  }
  if (const auto* value = std::get_if<graph::PropertyValue>(&cell.value)) {
    return graph::to_literal(*value);
  }
  if (const auto* count = std::get_if<std::int64_t>(&cell.value)) {
    return std::to_string(*count);
  }
  return "null";
}

std::string render_table(const ResultTable& table,
                         const graph::PropertyGraph& store) {
  std::string out;
  bool first = true;
  for (const auto& column : table.columns) {
    if (!first) out += " | ";
    out += column;
    first = false;
  }
  out += '\n';
  for (const auto& row : table.rows) {
    first = true;
    for (const auto& cell : row) {
      if (!first) out += " | ";
      out += render_cell(cell, store);
      first = false;
    }
    out += '\n';
  }
  return out;
}

}  // namespace rpslrepo::query
