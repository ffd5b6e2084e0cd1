#pragma once

#include <optional>
#include <string_view>

#include "rpslrepo/diagnostic.hpp"
#include "rpslrepo/query_ast.hpp"

namespace rpslrepo::query {

struct QueryParseResult {
  std::optional<QueryAst> ast;
  std::optional<Diagnostic> error;

  bool ok() const { return ast.has_value(); }
};

// Parses one query:
//
//   query   := MATCH pattern ("," pattern)* (WHERE expr)? RETURN
//              (DISTINCT)? item ("," item)* ";"?
//   pattern := node (rel node)*
//   node    := "(" IDENT? (":" IDENT)? ("{" IDENT ":" literal
//              ("," IDENT ":" literal)* "}")? ")"
//   rel     := "-[" ":" IDENT "]->" | "<-[" ":" IDENT "]-"
//   expr    := or-tree of and-trees of (NOT)? (comparison | pattern |
//              "(" expr ")")
//   item    := COUNT "(" ("*" | IDENT) ")" | IDENT ("." IDENT)?
//
// Keywords are case-insensitive; identifiers, labels and rel types are
// case-sensitive. Literals are double-quoted strings, integers, true and
// false. A leading "(" in an expression is tried as a pattern first, then
// as a parenthesized expression. Semantic checks (unbound variables,
// aggregate/non-aggregate mixing) run before the result is returned.
QueryParseResult parse_query(std::string_view text);

// Semantic checks alone, for programmatically built ASTs.
std::optional<Diagnostic> check_query(const QueryAst& ast);

}  // namespace rpslrepo::query
