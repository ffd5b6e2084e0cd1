#pragma once

#include <stdexcept>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "rpslrepo/decl.hpp"
#include "rpslrepo/diagnostic.hpp"

namespace rpslrepo::model {

class ModelError : public std::runtime_error {
 public:
  ModelError(DiagCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  DiagCode code() const { return code_; }

 private:
  DiagCode code_;
};

// A resolved repository model: every name bound, the extends relation
// acyclic, component arities checked. Declaration order is preserved; it
// drives the deterministic store mapping.
struct Model {
  std::vector<TypeDecl> types;
  std::vector<ComponentDecl> components;
  std::vector<PerceptionGraphDecl> graphs;

  const TypeDecl* find_type(std::string_view name) const;
  const ComponentDecl* find_component(std::string_view name) const;
  const PerceptionGraphDecl* find_graph(std::string_view name) const;

  std::unordered_map<std::string, std::size_t> type_index;
  std::unordered_map<std::string, std::size_t> component_index;
  std::unordered_map<std::string, std::size_t> graph_index;
};

struct BuildResult {
  Model model;
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return diagnostics.empty(); }
};

// Resolves a declaration list into a Model, collecting every diagnostic
// rather than stopping at the first. Per-graph structural validation is
// separate (validate_graph).
BuildResult build_model(const std::vector<Decl>& decls);

// True iff sub equals super or super is reachable from sub along the
// declared extends chain. Throws ModelError{UnknownType} for unknown names.
bool type_conforms(const Model& model, std::string_view sub,
                   std::string_view super);

}  // namespace rpslrepo::model
