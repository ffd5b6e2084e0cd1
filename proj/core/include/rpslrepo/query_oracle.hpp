#pragma once

#include "rpslrepo/property_graph.hpp"
#include "rpslrepo/query_ast.hpp"
#include "rpslrepo/result_table.hpp"

namespace rpslrepo::query {

// Brute-force reference executor: enumerates every assignment of the match
// variables to store nodes (|V|^k tuples), keeps the assignments that
// satisfy all patterns and the WHERE expression by exhaustive checking
// (relationships verified by scanning the full edge map, never the
// indices), then projects and orders rows exactly like execute. Used to
// cross-check execute; keep its matching logic independent.
ResultTable execute_oracle(const QueryAst& ast,
                           const graph::PropertyGraph& store);

}  // namespace rpslrepo::query
