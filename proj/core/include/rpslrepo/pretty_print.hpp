#pragma once

#include <string>
#include <vector>

#include "rpslrepo/decl.hpp"
#include "rpslrepo/dsl_parser.hpp"

namespace rpslrepo::dsl {

// Canonical formatting: one declaration per block, 2-space indent, one
// port/instance/connection per line, instances before connections.
// Reparsing the output yields structurally equal declarations, and the
// printer is a fixed point of parse-then-print.
std::string pretty_print(const std::vector<model::Decl>& decls);
std::string pretty_print(const ParsedDocument& document);

}  // namespace rpslrepo::dsl
