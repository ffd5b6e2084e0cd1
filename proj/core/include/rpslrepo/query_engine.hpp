#pragma once

#include "rpslrepo/property_graph.hpp"
#include "rpslrepo/query_ast.hpp"
#include "rpslrepo/result_table.hpp"

namespace rpslrepo::query {

// Executes a semantically checked query. Pattern matching is homomorphic:
// distinct variables may bind the same node. Each match pattern enumerates
// node bindings (label-index scans expanded along adjacency lists);
// comma-separated patterns natural-join on shared variables. WHERE filters
// bindings: pattern predicates hold iff the path is satisfiable with
// anonymous nodes existentially quantified, and comparisons on missing
// properties are false. RETURN projects; DISTINCT dedupes whole rows;
// COUNT collapses everything to a single row. Read-only over the store.
ResultTable execute(const QueryAst& ast, const graph::PropertyGraph& store);

}  // namespace rpslrepo::query
