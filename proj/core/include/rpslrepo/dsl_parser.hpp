#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rpslrepo/decl.hpp"
#include "rpslrepo/diagnostic.hpp"

namespace rpslrepo::dsl {

struct ParsedDocument {
  std::vector<model::Decl> decls;  // declaration order preserved
  std::string source_name;
};

struct ParseResult {
  ParsedDocument document;
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return diagnostics.empty(); }
};

// Recursive-descent parser for the declaration language:
//
//   document  := decl*
//   decl      := typeDecl | compDecl | graphDecl
//   typeDecl  := "type" IDENT ("extends" IDENT)? ";"
//   compDecl  := ("sensor" | "processor") IDENT "{" portDecl* "}"
//   portDecl  := ("in" | "out") IDENT ":" IDENT ";"
//   graphDecl := "graph" IDENT "{" (instDecl | connDecl)* "}"
//   instDecl  := "node" IDENT ":" IDENT ";"
//   connDecl  := IDENT "." IDENT "->" IDENT "." IDENT ";"
//
// Identifiers are [A-Za-z_][A-Za-z0-9_]*; keywords are reserved and
// case-sensitive; '#' starts a line comment. On a syntax error the parser
// recovers to the next ';' or '}' and keeps going, so one run reports every
// error it can find. Never throws, whatever the input bytes.
ParseResult parse_document(std::string_view text, std::string source_name);

}  // namespace rpslrepo::dsl
