#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "rpslrepo/diagnostic.hpp"
#include "rpslrepo/model.hpp"
#include "rpslrepo/property_graph.hpp"

namespace rpslrepo::model {

class ValidationFailed : public std::runtime_error {
 public:
  explicit ValidationFailed(std::vector<Diagnostic> diagnostics)
      : std::runtime_error("model has invalid perception graphs"),
        diagnostics_(std::move(diagnostics)) {}

  const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }

 private:
  std::vector<Diagnostic> diagnostics_;
};

struct IngestReport {
  std::size_t node_count = 0;
  std::size_t edge_count = 0;
  std::map<std::string, std::size_t> nodes_by_label;
  std::map<std::string, std::size_t> edges_by_rel_type;
};

// Maps a validated model into the store, deterministically in declaration
// order:
//   - one Type node per type decl (property: name), then extends edges;
//   - per graph: one PerceptionGraph node (name), then per instance one
//     Component node (name, definition, kind) plus a contains edge, then
//     connects_to edges (src_port, dst_port) per connection, then per
//     instance one of_type edge per distinct output type and one consumes
//     edge per distinct input type, in port order.
//
// Throws ValidationFailed (store untouched) if any graph fails validation.
IngestReport ingest(const Model& model, graph::PropertyGraph& store);

}  // namespace rpslrepo::model
