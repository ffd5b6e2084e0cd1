#include "rpslrepo/snapshot.hpp"

#include <istream>
#include <limits>
#include <ostream>
#include <string>

#include <json.hpp>

namespace rpslrepo::graph {

namespace {

using ordered_json = nlohmann::ordered_json;
using nlohmann::json;

[[noreturn]] void malformed(int line, const std::string& why) {
  throw StoreError(StoreErrorCode::MalformedSnapshot,
                   "malformed snapshot at line " + std::to_string(line) +
                       ": " + why,
                   0, line);
}

ordered_json props_to_json(const PropertyMap& props) {
  ordered_json obj = ordered_json::object();
  for (const auto& [name, value] : props) {  // std::map: lexicographic keys
    switch (value.kind()) {
      case PropertyValue::Kind::Text: obj[name] = value.text(); break;
      case PropertyValue::Kind::Int: obj[name] = value.integer(); break;
      case PropertyValue::Kind::Bool: obj[name] = value.boolean(); break;
    }
  }
  return obj;
}

std::string dump_line(const ordered_json& j) {
  return j.dump(-1, ' ', false, nlohmann::detail::error_handler_t::replace);
}

std::uint64_t read_id(const json& j, const char* what, int line) {
  if (!j.is_number_integer() && !j.is_number_unsigned()) {
    malformed(line, std::string(what) + " must be an integer");
  }
  if (j.is_number_integer() && j.get<std::int64_t>() < 1) {
    malformed(line, std::string(what) + " must be positive");
  }
  std::uint64_t v = j.get<std::uint64_t>();
  if (v < 1) malformed(line, std::string(what) + " must be positive");
  return v;
}

PropertyValue read_value(const json& j, int line) {
  if (j.is_string()) return PropertyValue(j.get<std::string>());
  if (j.is_boolean()) return PropertyValue(j.get<bool>());
  if (j.is_number_integer()) return PropertyValue(j.get<std::int64_t>());
  if (j.is_number_unsigned()) {
    std::uint64_t v = j.get<std::uint64_t>();
    if (v > static_cast<std::uint64_t>(
                std::numeric_limits<std::int64_t>::max())) {
      malformed(line, "integer property out of 64-bit signed range");
    }
    return PropertyValue(static_cast<std::int64_t>(v));
  }
  malformed(line, "property values must be strings, integers or booleans");
}

PropertyMap read_props(const json& j, int line) {
  if (!j.is_object()) malformed(line, "\"props\" must be an object");
  PropertyMap props;
  for (const auto& [name, value] : j.items()) {
    if (!is_valid_name(name)) {
      malformed(line, "bad property name \"" + name + '"');
    }
    props.emplace(name, read_value(value, line));
  }
  return props;
}

void require_keys(const json& j, std::initializer_list<const char*> keys,
                  int line) {
  if (!j.is_object()) malformed(line, "record is not a JSON object");
  if (j.size() != keys.size()) malformed(line, "unexpected record keys");
  for (const char* key : keys) {
    if (!j.contains(key)) {
      malformed(line, std::string("missing key \"") + key + '"');
    }
  }
}

}  // namespace

void snapshot_write(const PropertyGraph& store, std::ostream& out) {
  out << kSnapshotHeader << '\n';
  for (const auto& [id, node] : store.nodes()) {
    ordered_json j;
    j["k"] = "n";
    j["id"] = id.value;
    j["labels"] = node.labels;  // std::set: lexicographic order
    j["props"] = props_to_json(node.properties);
    out << dump_line(j) << '\n';
  }
  for (const auto& [id, edge] : store.edges()) {
    ordered_json j;
    j["k"] = "e";
    j["id"] = id.value;
    j["t"] = edge.rel_type;
    j["src"] = edge.src.value;
    j["dst"] = edge.dst.value;
    j["props"] = props_to_json(edge.properties);
    out << dump_line(j) << '\n';
  }
}

PropertyGraph snapshot_read(std::istream& in) {
  PropertyGraph store;
  std::string line;
  int line_no = 1;
  if (!std::getline(in, line) || line != kSnapshotHeader) {
    malformed(1, "expected header \"" + std::string(kSnapshotHeader) + '"');
  }

  while (std::getline(in, line)) {
    ++line_no;
    json j = json::parse(line, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded()) malformed(line_no, "invalid JSON record");
    if (!j.is_object() || !j.contains("k") || !j["k"].is_string()) {
      malformed(line_no, "record without a \"k\" kind");
    }
    const std::string kind = j["k"].get<std::string>();

    if (kind == "n") {
      require_keys(j, {"k", "id", "labels", "props"}, line_no);
      std::uint64_t id = read_id(j["id"], "node id", line_no);
      if (id < store.next_node_id_) {
        malformed(line_no, "node ids must be strictly ascending");
      }
      if (!j["labels"].is_array() || j["labels"].empty()) {
        malformed(line_no, "\"labels\" must be a non-empty array");
      }
      std::set<std::string> labels;
      for (const auto& l : j["labels"]) {
        if (!l.is_string() || !is_valid_name(l.get<std::string>())) {
          malformed(line_no, "bad label");
        }
        labels.insert(l.get<std::string>());
      }
      NodeId nid{id};
      for (const auto& label : labels) store.label_index_[label].insert(nid);
      store.out_by_node_.emplace(nid, std::vector<EdgeId>{});
      store.in_by_node_.emplace(nid, std::vector<EdgeId>{});
      store.nodes_.emplace(nid,
                           Node{nid, std::move(labels),
                                read_props(j["props"], line_no)});
      store.next_node_id_ = id + 1;
    } else if (kind == "e") {
      require_keys(j, {"k", "id", "t", "src", "dst", "props"}, line_no);
      std::uint64_t id = read_id(j["id"], "edge id", line_no);
      if (id < store.next_edge_id_) {
        malformed(line_no, "edge ids must be strictly ascending");
      }
      if (!j["t"].is_string() || !is_valid_name(j["t"].get<std::string>())) {
        malformed(line_no, "bad relationship type");
      }
      NodeId src{read_id(j["src"], "edge src", line_no)};
      NodeId dst{read_id(j["dst"], "edge dst", line_no)};
      if (!store.has_node(src)) {
        malformed(line_no,
                  "edge references unknown node " + std::to_string(src.value));
      }
      if (!store.has_node(dst)) {
        malformed(line_no,
                  "edge references unknown node " + std::to_string(dst.value));
      }
      EdgeId eid{id};
      store.rel_type_index_[j["t"].get<std::string>()].insert(eid);
      store.out_by_node_[src].push_back(eid);
      store.in_by_node_[dst].push_back(eid);
      store.edges_.emplace(eid, Edge{eid, j["t"].get<std::string>(), src, dst,
                                     read_props(j["props"], line_no)});
      store.next_edge_id_ = id + 1;
    } else {
      malformed(line_no, "unknown record kind \"" + kind + '"');
    }
  }
  return store;
}

}  // namespace rpslrepo::graph
