#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "rpslrepo/ids.hpp"
#include "rpslrepo/property_value.hpp"

namespace rpslrepo::graph {

enum class StoreErrorCode {
  EmptyLabels,
  MalformedString,
  UnknownNode,
  UnknownEdge,
  HasIncidentEdges,
  MalformedSnapshot,
};

std::string_view to_string(StoreErrorCode code);

class StoreError : public std::runtime_error {
 public:
  StoreError(StoreErrorCode code, const std::string& message,
             std::uint64_t subject = 0, int line = 0);

  StoreErrorCode code() const { return code_; }
  // Offending id for UnknownNode/UnknownEdge/HasIncidentEdges.
  std::uint64_t subject() const { return subject_; }
  // 1-based snapshot line for MalformedSnapshot.
  int line() const { return line_; }

 private:
  StoreErrorCode code_;
  std::uint64_t subject_;
  int line_;
};

struct Node {
  NodeId id;
  std::set<std::string> labels;  // non-empty
  PropertyMap properties;
};

struct Edge {
  EdgeId id;
  std::string rel_type;
  NodeId src;
  NodeId dst;
  PropertyMap properties;
};

// In-memory directed labeled property graph with label and
// relationship-type indices.
//
// Thread contract: any number of concurrent readers (const members) or one
// exclusive writer. There is no internal locking and no background work.
//
// Labels, property names and relationship types must be non-empty and free
// of whitespace. Self-loops are allowed; acyclicity is a domain-level
// concern, not a store-level one.
class PropertyGraph {
 public:
  NodeId create_node(std::set<std::string> labels, PropertyMap properties);
  EdgeId create_edge(NodeId src, std::string rel_type, NodeId dst,
                     PropertyMap properties);

  // With detach=false refuses to delete a node with incident edges
  // (HasIncidentEdges); with detach=true removes the incident edges first.
  void delete_node(NodeId id, bool detach);
  void delete_edge(EdgeId id);

  bool has_node(NodeId id) const { return nodes_.contains(id); }
  bool has_edge(EdgeId id) const { return edges_.contains(id); }
  const Node& node(NodeId id) const;
  const Edge& edge(EdgeId id) const;

  // Exactly the ids carrying the label; unknown labels yield an empty set.
  const std::set<NodeId>& nodes_by_label(const std::string& label) const;
  const std::set<EdgeId>& edges_by_rel_type(const std::string& rel_type) const;

  // Incident edges in creation order, optionally filtered by rel type.
  std::vector<Edge> out_edges(NodeId id,
                              const std::optional<std::string>& rel_type =
                                  std::nullopt) const;
  std::vector<Edge> in_edges(NodeId id,
                             const std::optional<std::string>& rel_type =
                                 std::nullopt) const;
  const std::vector<EdgeId>& out_edge_ids(NodeId id) const;
  const std::vector<EdgeId>& in_edge_ids(NodeId id) const;

  std::size_t node_count() const { return nodes_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const std::map<NodeId, Node>& nodes() const { return nodes_; }
  const std::map<EdgeId, Edge>& edges() const { return edges_; }
  const std::map<std::string, std::set<NodeId>>& label_index() const {
    return label_index_;
  }
  const std::map<std::string, std::set<EdgeId>>& rel_type_index() const {
    return rel_type_index_;
  }

 private:
  std::vector<Edge> collect_edges(const std::vector<EdgeId>& ids,
                                  const std::optional<std::string>& rel_type)
      const;

  std::map<NodeId, Node> nodes_;
  std::map<EdgeId, Edge> edges_;
  std::map<std::string, std::set<NodeId>> label_index_;
  std::map<std::string, std::set<EdgeId>> rel_type_index_;
  std::map<NodeId, std::vector<EdgeId>> out_by_node_;
  std::map<NodeId, std::vector<EdgeId>> in_by_node_;
  std::uint64_t next_node_id_ = 1;
  std::uint64_t next_edge_id_ = 1;

  friend PropertyGraph snapshot_read(std::istream& in);
};

// True for strings usable as labels, property names and rel types.
bool is_valid_name(std::string_view s);

}  // namespace rpslrepo::graph
