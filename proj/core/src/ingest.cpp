#include "rpslrepo/ingest.hpp"

#include <set>
#include <unordered_map>

#include "rpslrepo/schema.hpp"
#include "rpslrepo/validate.hpp"

namespace rpslrepo::model {

namespace schema_ns = schema;

IngestReport ingest(const Model& model, graph::PropertyGraph& store) {
  auto diags = validate_all(model);
  if (!diags.empty()) throw ValidationFailed(std::move(diags));

  using graph::NodeId;
  using graph::PropertyMap;
  using graph::PropertyValue;

  IngestReport report;
  auto add_node = [&](std::string_view label, PropertyMap props) {
    NodeId id = store.create_node({std::string(label)}, std::move(props));
    ++report.node_count;
    ++report.nodes_by_label[std::string(label)];
    return id;
  };
  auto add_edge = [&](NodeId src, std::string_view rel, NodeId dst,
                      PropertyMap props = {}) {
    store.create_edge(src, std::string(rel), dst, std::move(props));
    ++report.edge_count;
    ++report.edges_by_rel_type[std::string(rel)];
  };

  std::unordered_map<std::string, NodeId> type_nodes;
  for (const auto& type : model.types) {
    type_nodes[type.name] = add_node(
        schema_ns::kTypeLabel,
        {{std::string(schema_ns::kNameProp), PropertyValue(type.name)}});
  }
  for (const auto& type : model.types) {
    if (type.extends) {
      add_edge(type_nodes.at(type.name), schema_ns::kExtendsRel,
               type_nodes.at(*type.extends));
    }
  }

  for (const auto& graph_decl : model.graphs) {
    NodeId graph_node = add_node(
        schema_ns::kGraphLabel,
        {{std::string(schema_ns::kNameProp), PropertyValue(graph_decl.name)}});

    std::unordered_map<std::string, NodeId> instance_nodes;
    for (const auto& inst : graph_decl.instances) {
      const ComponentDecl* comp = model.find_component(inst.component_name);
      NodeId comp_node = add_node(
          schema_ns::kComponentLabel,
          {{std::string(schema_ns::kNameProp),
            PropertyValue(inst.instance_name)},
           {std::string(schema_ns::kDefinitionProp),
            PropertyValue(comp->name)},
           {std::string(schema_ns::kKindProp),
            PropertyValue(std::string(to_string(comp->kind)))}});
      instance_nodes[inst.instance_name] = comp_node;
      add_edge(graph_node, schema_ns::kContainsRel, comp_node);
    }

    for (const auto& conn : graph_decl.connections) {
      add_edge(instance_nodes.at(conn.src_instance), schema_ns::kConnectsToRel,
               instance_nodes.at(conn.dst_instance),
               {{std::string(schema_ns::kSrcPortProp),
                 PropertyValue(conn.src_port)},
                {std::string(schema_ns::kDstPortProp),
                 PropertyValue(conn.dst_port)}});
    }

    for (const auto& inst : graph_decl.instances) {
      const ComponentDecl* comp = model.find_component(inst.component_name);
      NodeId comp_node = instance_nodes.at(inst.instance_name);
      std::set<std::string> emitted_out;
      std::set<std::string> emitted_in;
      for (const auto& port : comp->ports) {
        if (port.direction == PortDirection::Out &&
            emitted_out.insert(port.type_name).second) {
          add_edge(comp_node, schema_ns::kOfTypeRel,
                   type_nodes.at(port.type_name));
        }
      }
      for (const auto& port : comp->ports) {
        if (port.direction == PortDirection::In &&
            emitted_in.insert(port.type_name).second) {
          add_edge(comp_node, schema_ns::kConsumesRel,
                   type_nodes.at(port.type_name));
        }
      }
    }
  }

  return report;
}

}  // namespace rpslrepo::model
