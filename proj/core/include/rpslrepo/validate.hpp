#pragma once

#include <vector>

#include "rpslrepo/diagnostic.hpp"
#include "rpslrepo/model.hpp"

namespace rpslrepo::model {

// Structural validation of one perception graph against a built model:
// unique instance names, resolvable components and ports, correct port
// directions, every input connected by exactly one writer, source types
// conforming to destination types, and an acyclic instance-level
// connection graph. CycleDetected diagnostics carry a witness walk
// (first == last instance, every consecutive pair a declared connection).
//
// Returns all diagnostics found; an empty vector means the graph is valid.
std::vector<Diagnostic> validate_graph(const PerceptionGraphDecl& graph,
                                       const Model& model);

// Convenience: validate every graph in the model, concatenating results.
std::vector<Diagnostic> validate_all(const Model& model);

}  // namespace rpslrepo::model
