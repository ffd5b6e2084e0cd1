#include <doctest.h>

#include <sstream>

#include "rpslrepo/ingest.hpp"
#include "rpslrepo/snapshot.hpp"
#include "support/fixture.hpp"

using namespace rpslrepo::model;
using namespace rpslrepo::graph;

namespace {

std::string snapshot_of(const PropertyGraph& g) {
  std::ostringstream out;
  snapshot_write(g, out);
  return out.str();
}

}  // namespace

TEST_CASE("fixture ingest produces the mapped store") {
  Model model = testsupport::fixture_model();
  PropertyGraph store;
  IngestReport report = ingest(model, store);

  CHECK(report.node_count == 8);
  CHECK(report.edge_count == 12);
  CHECK(report.nodes_by_label.at("Type") == 2);
  CHECK(report.nodes_by_label.at("Component") == 4);
  CHECK(report.nodes_by_label.at("PerceptionGraph") == 2);
  CHECK(report.edges_by_rel_type.at("contains") == 4);
  CHECK(report.edges_by_rel_type.at("connects_to") == 2);
  CHECK(report.edges_by_rel_type.at("of_type") == 4);
  CHECK(report.edges_by_rel_type.at("consumes") == 2);
  CHECK(store.node_count() == 8);
  CHECK(store.edge_count() == 12);
}

TEST_CASE("both first components share the single T node") {
  PropertyGraph store = testsupport::fixture_store();

  NodeId t_node;
  for (NodeId id : store.nodes_by_label("Type")) {
    if (store.node(id).properties.at("name") == PropertyValue("T")) {
      t_node = id;
    }
  }
  REQUIRE(t_node.valid());

  std::vector<NodeId> producers;
  for (const Edge& e : store.in_edges(t_node, std::string("of_type"))) {
    producers.push_back(e.src);
  }
  REQUIRE(producers.size() == 2);
  CHECK(store.node(producers[0]).properties.at("name") ==
        PropertyValue("cam1"));
  CHECK(store.node(producers[1]).properties.at("name") ==
        PropertyValue("cam2"));

  // Type nodes are pure sinks under this schema.
  CHECK(store.out_edges(t_node).empty());

  // cam1 -> of_type -> T is its only of_type edge.
  NodeId cam1 = producers[0];
  auto of_type = store.out_edges(cam1, std::string("of_type"));
  REQUIRE(of_type.size() == 1);
  CHECK(of_type[0].dst == t_node);

  // cam1 carries exactly contains(in), connects_to(out), of_type(out).
  CHECK(store.in_edges(cam1).size() == 1);
  CHECK(store.out_edges(cam1).size() == 2);
}

TEST_CASE("component nodes carry name, definition and kind") {
  PropertyGraph store = testsupport::fixture_store();
  bool saw_detector = false;
  for (NodeId id : store.nodes_by_label("Component")) {
    const auto& props = store.node(id).properties;
    if (props.at("name") == PropertyValue("det1")) {
      saw_detector = true;
      CHECK(props.at("definition") == PropertyValue("Detector"));
      CHECK(props.at("kind") == PropertyValue("processing"));
    }
  }
  CHECK(saw_detector);
}

TEST_CASE("connects_to edges carry the port names") {
  PropertyGraph store = testsupport::fixture_store();
  const auto& ids = store.edges_by_rel_type("connects_to");
  REQUIRE(ids.size() == 2);
  for (EdgeId id : ids) {
    const Edge& e = store.edge(id);
    CHECK(e.properties.at("src_port") == PropertyValue("frame"));
    CHECK(e.properties.at("dst_port") == PropertyValue("frame"));
  }
}

TEST_CASE("empty model ingests to an empty store") {
  PropertyGraph store;
  IngestReport report = ingest(Model{}, store);
  CHECK(report.node_count == 0);
  CHECK(report.edge_count == 0);
  CHECK(store.node_count() == 0);
}

TEST_CASE("ingest is deterministic: same model, identical snapshot bytes") {
  Model model = testsupport::fixture_model();
  PropertyGraph first;
  PropertyGraph second;
  ingest(model, first);
  ingest(model, second);
  CHECK(snapshot_of(first) == snapshot_of(second));
}

TEST_CASE("extends edges link type nodes") {
  auto parsed = rpslrepo::dsl::parse_document(
      "type Image; type RGBImage extends Image;", "inline");
  REQUIRE(parsed.ok());
  BuildResult built = build_model(parsed.document.decls);
  REQUIRE(built.ok());
  PropertyGraph store;
  IngestReport report = ingest(built.model, store);
  CHECK(report.edges_by_rel_type.at("extends") == 1);
  const Edge& e = store.edge(*store.edges_by_rel_type("extends").begin());
  CHECK(store.node(e.src).properties.at("name") == PropertyValue("RGBImage"));
  CHECK(store.node(e.dst).properties.at("name") == PropertyValue("Image"));
}

TEST_CASE("of_type and consumes edges are one per distinct port type") {
  auto parsed = rpslrepo::dsl::parse_document(
      "type T; type U;"
      "sensor S { out a: T; out b: T; out c: U; }"
      "graph g { node s: S; }",
      "inline");
  REQUIRE(parsed.ok());
  BuildResult built = build_model(parsed.document.decls);
  REQUIRE(built.ok());
  PropertyGraph store;
  IngestReport report = ingest(built.model, store);
  CHECK(report.edges_by_rel_type.at("of_type") == 2);  // T and U, deduped
  CHECK(report.edges_by_rel_type.count("consumes") == 0);
}

TEST_CASE("invalid models leave the store untouched") {
  auto parsed = rpslrepo::dsl::parse_document(
      "type T;"
      "processor P { in i: T; out o: T; }"
      "graph g { node a: P; node b: P; a.o -> b.i; b.o -> a.i; }",
      "inline");
  REQUIRE(parsed.ok());
  BuildResult built = build_model(parsed.document.decls);
  REQUIRE(built.ok());

  PropertyGraph store;
  store.create_node({"Existing"}, {});
  CHECK_THROWS_AS(ingest(built.model, store), ValidationFailed);
  CHECK(store.node_count() == 1);
  CHECK(store.edge_count() == 0);

  try {
    ingest(built.model, store);
  } catch (const ValidationFailed& e) {
    CHECK_FALSE(e.diagnostics().empty());
  }
}
