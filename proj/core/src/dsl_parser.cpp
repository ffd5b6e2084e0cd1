#include "rpslrepo/dsl_parser.hpp"

#include <optional>

#include "rpslrepo/dsl_lexer.hpp"

namespace rpslrepo::dsl {

namespace {

using model::ComponentDecl;
using model::ComponentKind;
using model::Connection;
using model::InstanceDecl;
using model::PerceptionGraphDecl;
using model::PortDecl;
using model::PortDirection;
using model::TypeDecl;

std::string describe(const Token& tok) {
  if (tok.kind == TokenKind::Eof) return "end of input";
  return '\'' + tok.text + '\'';
}

class Parser {
 public:
  Parser(std::string_view text, std::string source_name)
      : tokens_(lex(text)), source_name_(std::move(source_name)) {}

  ParseResult run() {
    ParseResult result;
    result.document.source_name = source_name_;
    while (!at_eof()) {
      if (at_keyword("type")) {
        if (auto decl = parse_type()) result.document.decls.push_back(*decl);
      } else if (at_keyword("sensor") || at_keyword("processor")) {
        if (auto decl = parse_component()) {
          result.document.decls.push_back(*decl);
        }
      } else if (at_keyword("graph")) {
        if (auto decl = parse_graph()) result.document.decls.push_back(*decl);
      } else {
        error("declaration ('type', 'sensor', 'processor' or 'graph')");
        sync_toplevel();
      }
    }
    result.diagnostics = std::move(diagnostics_);
    return result;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& advance() { return tokens_[pos_++]; }
  bool at_eof() const { return peek().kind == TokenKind::Eof; }
  bool at_keyword(std::string_view kw) const {
    return peek().kind == TokenKind::Keyword && peek().text == kw;
  }
  bool at_punct(std::string_view p) const {
    return peek().kind == TokenKind::Punct && peek().text == p;
  }

  void error(const std::string& expected) {
    const Token& found = peek();
    Diagnostic d;
    d.code = DiagCode::SyntaxError;
    d.message = "expected " + expected + ", found " + describe(found);
    d.source_name = source_name_;
    d.line = found.line;
    d.column = found.column;
    diagnostics_.push_back(std::move(d));
  }

  // Panic-mode recovery. At the top level, stop after a ';' or '}' or just
  // before the next declaration keyword; inside a block, stop after ';' but
  // leave '}' for the block loop to close.
  void sync_toplevel() {
    while (!at_eof()) {
      if (at_punct(";") || at_punct("}")) {
        advance();
        return;
      }
      if (at_keyword("type") || at_keyword("sensor") ||
          at_keyword("processor") || at_keyword("graph")) {
        return;
      }
      advance();
    }
  }

  void sync_in_block() {
    while (!at_eof()) {
      if (at_punct(";")) {
        advance();
        return;
      }
      if (at_punct("}")) return;
      advance();
    }
  }

  std::optional<std::string> expect_identifier(const std::string& what) {
    if (peek().kind == TokenKind::Identifier) return advance().text;
    error(what);
    return std::nullopt;
  }

  bool expect_punct(std::string_view p) {
    if (at_punct(p)) {
      advance();
      return true;
    }
    error('\'' + std::string(p) + '\'');
    return false;
  }

  std::optional<TypeDecl> parse_type() {
    advance();  // "type"
    auto name = expect_identifier("identifier");
    if (!name) {
      sync_toplevel();
      return std::nullopt;
    }
    TypeDecl decl;
    decl.name = *name;
    if (at_keyword("extends")) {
      advance();
      auto parent = expect_identifier("identifier");
      if (!parent) {
        sync_toplevel();
        return std::nullopt;
      }
      decl.extends = *parent;
    }
    if (!expect_punct(";")) {
      sync_toplevel();
      return decl;  // the declaration itself parsed
    }
    return decl;
  }

  std::optional<ComponentDecl> parse_component() {
    ComponentDecl decl;
    decl.kind = advance().text == "sensor" ? ComponentKind::Sensor
                                           : ComponentKind::Processing;
    auto name = expect_identifier("identifier");
    if (!name) {
      sync_toplevel();
      return std::nullopt;
    }
    decl.name = *name;
    if (!expect_punct("{")) {
      sync_toplevel();
      return decl;
    }
    while (true) {
      if (at_punct("}")) {
        advance();
        break;
      }
      if (at_eof()) {
        error("'in', 'out' or '}'");
        break;
      }
      if (at_keyword("in") || at_keyword("out")) {
        if (auto port = parse_port()) decl.ports.push_back(*port);
      } else {
        error("'in', 'out' or '}'");
        sync_in_block();
      }
    }
    return decl;
  }

  std::optional<PortDecl> parse_port() {
    PortDecl port;
    port.direction = advance().text == "in" ? PortDirection::In
                                            : PortDirection::Out;
    auto name = expect_identifier("port name");
    if (!name) {
      sync_in_block();
      return std::nullopt;
    }
    port.name = *name;
    if (!expect_punct(":")) {
      sync_in_block();
      return std::nullopt;
    }
    auto type_name = expect_identifier("type identifier");
    if (!type_name) {
      sync_in_block();
      return std::nullopt;
    }
    port.type_name = *type_name;
    if (!expect_punct(";")) {
      sync_in_block();
      return port;
    }
    return port;
  }

  std::optional<PerceptionGraphDecl> parse_graph() {
    advance();  // "graph"
    PerceptionGraphDecl decl;
    auto name = expect_identifier("identifier");
    if (!name) {
      sync_toplevel();
      return std::nullopt;
    }
    decl.name = *name;
    if (!expect_punct("{")) {
      sync_toplevel();
      return decl;
    }
    while (true) {
      if (at_punct("}")) {
        advance();
        break;
      }
      if (at_eof()) {
        error("'node', a connection or '}'");
        break;
      }
      if (at_keyword("node")) {
        if (auto inst = parse_instance()) decl.instances.push_back(*inst);
      } else if (peek().kind == TokenKind::Identifier) {
        if (auto conn = parse_connection()) {
          decl.connections.push_back(*conn);
        }
      } else {
        error("'node', a connection or '}'");
        sync_in_block();
      }
    }
    return decl;
  }

  std::optional<InstanceDecl> parse_instance() {
    advance();  // "node"
    InstanceDecl inst;
    auto name = expect_identifier("instance name");
    if (!name) {
      sync_in_block();
      return std::nullopt;
    }
    inst.instance_name = *name;
    if (!expect_punct(":")) {
      sync_in_block();
      return std::nullopt;
    }
    auto comp = expect_identifier("component identifier");
    if (!comp) {
      sync_in_block();
      return std::nullopt;
    }
    inst.component_name = *comp;
    if (!expect_punct(";")) {
      sync_in_block();
      return inst;
    }
    return inst;
  }

  std::optional<Connection> parse_connection() {
    Connection conn;
    conn.src_instance = advance().text;
    if (!expect_punct(".")) {
      sync_in_block();
      return std::nullopt;
    }
    auto src_port = expect_identifier("port name");
    if (!src_port) {
      sync_in_block();
      return std::nullopt;
    }
    conn.src_port = *src_port;
    if (!expect_punct("->")) {
      sync_in_block();
      return std::nullopt;
    }
    auto dst_inst = expect_identifier("instance name");
    if (!dst_inst) {
      sync_in_block();
      return std::nullopt;
    }
    conn.dst_instance = *dst_inst;
    if (!expect_punct(".")) {
      sync_in_block();
      return std::nullopt;
    }
    auto dst_port = expect_identifier("port name");
    if (!dst_port) {
      sync_in_block();
      return std::nullopt;
    }
    conn.dst_port = *dst_port;
    if (!expect_punct(";")) {
      sync_in_block();
      return conn;
    }
    return conn;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::string source_name_;
  std::vector<Diagnostic> diagnostics_;
};

}  // namespace

ParseResult parse_document(std::string_view text, std::string source_name) {
  return Parser(text, std::move(source_name)).run();
}

}  // namespace rpslrepo::dsl
