#pragma once

#include <string_view>
#include <utility>

#include "rpslrepo/dsl_parser.hpp"
#include "rpslrepo/ingest.hpp"
#include "rpslrepo/model.hpp"
#include "rpslrepo/property_graph.hpp"
#include "rpslrepo/validate.hpp"

namespace testsupport {

// The demo repository used across suites: two perception graphs of two
// components each, the first components both producing type T.
inline constexpr std::string_view kFixtureText =
    "type T; type U; "
    "sensor CameraDriver { out frame: T; } "
    "processor Detector { in frame: T; out result: U; } "
    "processor Segmenter { in frame: T; out mask: U; } "
    "graph g1 { node cam1: CameraDriver; node det1: Detector; "
    "cam1.frame -> det1.frame; } "
    "graph g2 { node cam2: CameraDriver; node seg1: Segmenter; "
    "cam2.frame -> seg1.frame; }";

inline rpslrepo::model::Model fixture_model() {
  auto parsed = rpslrepo::dsl::parse_document(kFixtureText, "fixture");
  REQUIRE(parsed.ok());
  auto built = rpslrepo::model::build_model(parsed.document.decls);
  REQUIRE(built.ok());
  REQUIRE(rpslrepo::model::validate_all(built.model).empty());
  return std::move(built.model);
}

inline rpslrepo::graph::PropertyGraph fixture_store() {
  rpslrepo::graph::PropertyGraph store;
  rpslrepo::model::ingest(fixture_model(), store);
  return store;
}

}  // namespace testsupport
