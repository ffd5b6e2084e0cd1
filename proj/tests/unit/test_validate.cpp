#include <doctest.h>

#include <algorithm>
#include <set>

#include "rpslrepo/validate.hpp"
#include "support/fixture.hpp"
#include "support/generators.hpp"

using namespace rpslrepo::model;
using rpslrepo::DiagCode;
using rpslrepo::Diagnostic;

namespace {

std::vector<Diagnostic> validate_decls(const std::vector<Decl>& decls) {
  BuildResult built = build_model(decls);
  REQUIRE(built.ok());
  return validate_all(built.model);
}

bool has_code(const std::vector<Diagnostic>& diags, DiagCode code) {
  return std::any_of(diags.begin(), diags.end(),
                     [&](const auto& d) { return d.code == code; });
}

// A witness must be a closed walk over declared connections.
void check_witness(const Diagnostic& diag, const PerceptionGraphDecl& graph) {
  const auto& witness = diag.cycle_witness;
  REQUIRE(witness.size() >= 2);
  CHECK(witness.front() == witness.back());
  std::set<std::pair<std::string, std::string>> declared;
  for (const auto& conn : graph.connections) {
    declared.insert({conn.src_instance, conn.dst_instance});
  }
  for (std::size_t i = 0; i + 1 < witness.size(); ++i) {
    CHECK(declared.contains({witness[i], witness[i + 1]}));
  }
}

std::vector<Decl> two_cycle_decls() {
  auto parsed = rpslrepo::dsl::parse_document(
      "type T;"
      "processor P { in i: T; out o: T; }"
      "graph g { node a: P; node b: P; a.o -> b.i; b.o -> a.i; }",
      "inline");
  REQUIRE(parsed.ok());
  return parsed.document.decls;
}

}  // namespace

TEST_CASE("the fixture graphs validate cleanly") {
  Model model = testsupport::fixture_model();
  for (const auto& graph : model.graphs) {
    CHECK(validate_graph(graph, model).empty());
  }
}

TEST_CASE("a two-instance cycle is detected with witness [a, b, a]") {
  auto decls = two_cycle_decls();
  BuildResult built = build_model(decls);
  REQUIRE(built.ok());
  auto diags = validate_graph(built.model.graphs[0], built.model);
  REQUIRE(diags.size() == 1);
  CHECK(diags[0].code == DiagCode::CycleDetected);
  CHECK(diags[0].cycle_witness == std::vector<std::string>{"a", "b", "a"});
  check_witness(diags[0], built.model.graphs[0]);
}

TEST_CASE("a self connection is a one-instance cycle") {
  auto parsed = rpslrepo::dsl::parse_document(
      "type T;"
      "processor P { in i: T; out o: T; }"
      "graph g { node a: P; a.o -> a.i; }",
      "inline");
  REQUIRE(parsed.ok());
  auto diags = validate_decls(parsed.document.decls);
  REQUIRE(has_code(diags, DiagCode::CycleDetected));
  CHECK(diags[0].cycle_witness == std::vector<std::string>{"a", "a"});
}

TEST_CASE("type mismatches name both ports") {
  auto parsed = rpslrepo::dsl::parse_document(
      "type T; type U;"
      "sensor S { out o: U; }"
      "processor P { in i: T; out o: U; }"
      "graph g { node s: S; node p: P; s.o -> p.i; }",
      "inline");
  REQUIRE(parsed.ok());
  auto diags = validate_decls(parsed.document.decls);
  REQUIRE(diags.size() == 1);
  CHECK(diags[0].code == DiagCode::TypeMismatch);
  CHECK(diags[0].message.find("s.o") != std::string::npos);
  CHECK(diags[0].message.find("p.i") != std::string::npos);
}

TEST_CASE("conforming subtypes are accepted across connections") {
  auto parsed = rpslrepo::dsl::parse_document(
      "type Image; type RGBImage extends Image;"
      "sensor Cam { out o: RGBImage; }"
      "processor Sink { in i: Image; out o: Image; }"
      "graph g { node c: Cam; node k: Sink; c.o -> k.i; }",
      "inline");
  REQUIRE(parsed.ok());
  CHECK(validate_decls(parsed.document.decls).empty());
}

TEST_CASE("wiring problems are reported with their codes") {
  auto parsed = rpslrepo::dsl::parse_document(
      "type T;"
      "sensor S { out o: T; }"
      "processor P { in i: T; in j: T; out o: T; }"
      "graph g {"
      "  node s: S; node p: P; node s2: Ghost;"
      "  s.o -> p.i; s.o -> p.i;"            // duplicate writer on p.i
      "  ghost.o -> p.j;"                    // unknown instance
      "  s.nope -> p.j;"                     // unknown port
      "  p.o -> s.o;"                        // direction mismatch on dst
      "}",
      "inline");
  REQUIRE(parsed.ok());
  BuildResult built = build_model(parsed.document.decls);
  REQUIRE(built.ok());
  auto diags = validate_graph(built.model.graphs[0], built.model);
  CHECK(has_code(diags, DiagCode::UnknownComponent));   // Ghost
  CHECK(has_code(diags, DiagCode::UnknownInstance));    // ghost
  CHECK(has_code(diags, DiagCode::UnknownPort));        // s.nope
  CHECK(has_code(diags, DiagCode::MultipleWriters));    // p.i twice
  CHECK(has_code(diags, DiagCode::DirectionMismatch));  // into s.o
  CHECK(has_code(diags, DiagCode::UnconnectedInput));   // p.j never wired
}

TEST_CASE("duplicate instance names are rejected") {
  auto parsed = rpslrepo::dsl::parse_document(
      "type T;"
      "sensor S { out o: T; }"
      "graph g { node a: S; node a: S; }",
      "inline");
  REQUIRE(parsed.ok());
  auto diags = validate_decls(parsed.document.decls);
  CHECK(has_code(diags, DiagCode::DuplicateName));
}

// Random DAGs must validate; the independent Kahn oracle must agree; and
// injecting one back edge must always flip the verdict to CycleDetected
// with a checkable witness.
TEST_CASE("random DAGs validate iff the topological oracle completes") {
  testsupport::Rng rng(4242);
  for (int round = 0; round < 60; ++round) {
    testsupport::DagCase dag = testsupport::random_dag(rng);

    auto order = testsupport::topo_sort_oracle(dag.instance_count, dag.edges);
    REQUIRE(order.has_value());

    BuildResult built = build_model(dag.decls);
    REQUIRE(built.ok());
    auto diags = validate_graph(*built.model.find_graph(dag.graph_name),
                                built.model);
    CHECK(diags.empty());

    testsupport::DagCase cyclic = testsupport::inject_back_edge(rng, dag);
    CHECK_FALSE(
        testsupport::topo_sort_oracle(cyclic.instance_count, cyclic.edges)
            .has_value());

    BuildResult rebuilt = build_model(cyclic.decls);
    REQUIRE(rebuilt.ok());
    const PerceptionGraphDecl* graph =
        rebuilt.model.find_graph(cyclic.graph_name);
    auto cyclic_diags = validate_graph(*graph, rebuilt.model);
    REQUIRE(has_code(cyclic_diags, DiagCode::CycleDetected));
    for (const auto& d : cyclic_diags) {
      if (d.code == DiagCode::CycleDetected) check_witness(d, *graph);
    }
  }
}
