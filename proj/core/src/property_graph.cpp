#include "rpslrepo/property_graph.hpp"

#include <algorithm>
#include <cctype>

namespace rpslrepo::graph {

std::string_view to_string(StoreErrorCode code) {
  switch (code) {
    case StoreErrorCode::EmptyLabels: return "EmptyLabels";
    case StoreErrorCode::MalformedString: return "MalformedString";
    case StoreErrorCode::UnknownNode: return "UnknownNode";
    case StoreErrorCode::UnknownEdge: return "UnknownEdge";
    case StoreErrorCode::HasIncidentEdges: return "HasIncidentEdges";
    case StoreErrorCode::MalformedSnapshot: return "MalformedSnapshot";
  }
  return "StoreError";
}

StoreError::StoreError(StoreErrorCode code, const std::string& message,
                       std::uint64_t subject, int line)
    : std::runtime_error(message), code_(code), subject_(subject),
      line_(line) {}

bool is_valid_name(std::string_view s) {
  if (s.empty()) return false;
  return std::none_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isspace(c) != 0;
  });
}

namespace {

void require_name(std::string_view s, const char* what) {
  if (!is_valid_name(s)) {
    throw StoreError(StoreErrorCode::MalformedString,
                     std::string(what) + " must be non-empty and contain no "
                                         "whitespace: \"" +
                         std::string(s) + '"');
  }
}

void require_property_names(const PropertyMap& properties) {
  for (const auto& [name, value] : properties) {
    (void)value;
    require_name(name, "property name");
  }
}

}  // namespace

NodeId PropertyGraph::create_node(std::set<std::string> labels,
                                  PropertyMap properties) {
  if (labels.empty()) {
    throw StoreError(StoreErrorCode::EmptyLabels,
                     "a node needs at least one label");
  }
  for (const auto& label : labels) require_name(label, "label");
  require_property_names(properties);

  NodeId id{next_node_id_++};
  for (const auto& label : labels) label_index_[label].insert(id);
  out_by_node_.emplace(id, std::vector<EdgeId>{});
  in_by_node_.emplace(id, std::vector<EdgeId>{});
  nodes_.emplace(id, Node{id, std::move(labels), std::move(properties)});
  return id;
}

EdgeId PropertyGraph::create_edge(NodeId src, std::string rel_type, NodeId dst,
                                  PropertyMap properties) {
  if (!has_node(src)) {
    throw StoreError(StoreErrorCode::UnknownNode,
                     "unknown source node " + std::to_string(src.value),
                     src.value);
  }
  if (!has_node(dst)) {
    throw StoreError(StoreErrorCode::UnknownNode,
                     "unknown destination node " + std::to_string(dst.value),
                     dst.value);
  }
  require_name(rel_type, "relationship type");
  require_property_names(properties);

  EdgeId id{next_edge_id_++};
  rel_type_index_[rel_type].insert(id);
  out_by_node_[src].push_back(id);
  in_by_node_[dst].push_back(id);
  edges_.emplace(id, Edge{id, std::move(rel_type), src, dst,
                          std::move(properties)});
  return id;
}

void PropertyGraph::delete_node(NodeId id, bool detach) {
  auto it = nodes_.find(id);
  if (it == nodes_.end()) {
    throw StoreError(StoreErrorCode::UnknownNode,
                     "unknown node " + std::to_string(id.value), id.value);
  }
  const auto& out = out_by_node_[id];
  const auto& in = in_by_node_[id];
  if (!out.empty() || !in.empty()) {
    if (!detach) {
      throw StoreError(StoreErrorCode::HasIncidentEdges,
                       "node " + std::to_string(id.value) +
                           " still has incident edges",
                       id.value);
    }
    std::set<EdgeId> incident(out.begin(), out.end());
    incident.insert(in.begin(), in.end());
    for (EdgeId e : incident) delete_edge(e);
  }

  for (const auto& label : it->second.labels) {
    auto idx = label_index_.find(label);
    idx->second.erase(id);
    if (idx->second.empty()) label_index_.erase(idx);
  }
  out_by_node_.erase(id);
  in_by_node_.erase(id);
  nodes_.erase(it);
}

void PropertyGraph::delete_edge(EdgeId id) {
  auto it = edges_.find(id);
  if (it == edges_.end()) {
    throw StoreError(StoreErrorCode::UnknownEdge,
                     "unknown edge " + std::to_string(id.value), id.value);
  }
  const Edge& e = it->second;
  auto idx = rel_type_index_.find(e.rel_type);
  idx->second.erase(id);
  if (idx->second.empty()) rel_type_index_.erase(idx);
  std::erase(out_by_node_[e.src], id);
  std::erase(in_by_node_[e.dst], id);
  edges_.erase(it);
}

const Node& PropertyGraph::node(NodeId id) const {
  auto it = nodes_.find(id);
  if (it == nodes_.end()) {
    throw StoreError(StoreErrorCode::UnknownNode,
                     "unknown node " + std::to_string(id.value), id.value);
  }
  return it->second;
}

const Edge& PropertyGraph::edge(EdgeId id) const {
  auto it = edges_.find(id);
  if (it == edges_.end()) {
    throw StoreError(StoreErrorCode::UnknownEdge,
                     "unknown edge " + std::to_string(id.value), id.value);
  }
  return it->second;
}

const std::set<NodeId>& PropertyGraph::nodes_by_label(
    const std::string& label) const {
  static const std::set<NodeId> empty;
  auto it = label_index_.find(label);
  return it == label_index_.end() ? empty : it->second;
}

const std::set<EdgeId>& PropertyGraph::edges_by_rel_type(
    const std::string& rel_type) const {
  static const std::set<EdgeId> empty;
  auto it = rel_type_index_.find(rel_type);
  return it == rel_type_index_.end() ? empty : it->second;
}

const std::vector<EdgeId>& PropertyGraph::out_edge_ids(NodeId id) const {
  auto it = out_by_node_.find(id);
  if (it == out_by_node_.end()) {
    throw StoreError(StoreErrorCode::UnknownNode,
                     "unknown node " + std::to_string(id.value), id.value);
  }
  return it->second;
}

const std::vector<EdgeId>& PropertyGraph::in_edge_ids(NodeId id) const {
  auto it = in_by_node_.find(id);
  if (it == in_by_node_.end()) {
    throw StoreError(StoreErrorCode::UnknownNode,
                     "unknown node " + std::to_string(id.value), id.value);
  }
  return it->second;
}

std::vector<Edge> PropertyGraph::collect_edges(
    const std::vector<EdgeId>& ids,
    const std::optional<std::string>& rel_type) const {
  std::vector<Edge> result;
  result.reserve(ids.size());
  for (EdgeId id : ids) {
    const Edge& e = edges_.at(id);
    if (!rel_type || e.rel_type == *rel_type) result.push_back(e);
  }
  return result;
}

std::vector<Edge> PropertyGraph::out_edges(
    NodeId id, const std::optional<std::string>& rel_type) const {
  return collect_edges(out_edge_ids(id), rel_type);
}

std::vector<Edge> PropertyGraph::in_edges(
    NodeId id, const std::optional<std::string>& rel_type) const {
  return collect_edges(in_edge_ids(id), rel_type);
}

}  // namespace rpslrepo::graph
