#include "rpslrepo/query_parser.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <string>
#include <vector>

namespace rpslrepo::query {

namespace {

using graph::PropertyValue;

enum class TokKind { Ident, Int, String, Punct, Eof };

struct Tok {
  TokKind kind = TokKind::Eof;
  std::string text;   // identifier text, punct text, or decoded string value
  std::int64_t int_value = 0;
  int line = 1;
  int column = 1;
};

struct ParseFail {
  Diagnostic diagnostic;
};

[[noreturn]] void fail(const std::string& message, int line, int column) {
  Diagnostic d;
  d.code = DiagCode::SyntaxError;
  d.message = message;
  d.source_name = "query";
  d.line = line;
  d.column = column;
  throw ParseFail{std::move(d)};
}

std::string to_lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  return out;
}

bool is_query_keyword(std::string_view word) {
  static const std::set<std::string, std::less<>> keywords = {
      "match", "where",  "return", "distinct", "count",
      "and",   "or",     "not",    "true",     "false"};
  return keywords.contains(to_lower(word));
}

bool is_ident_start(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_';
}

bool is_ident_char(char c) {
  return is_ident_start(c) || (c >= '0' && c <= '9');
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Tok> run() {
    std::vector<Tok> toks;
    while (i_ < text_.size()) {
      char c = text_[i_];
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' ||
          c == '\f') {
        advance(1);
        continue;
      }
      Tok tok;
      tok.line = line_;
      tok.column = column_;
      if (is_ident_start(c)) {
        std::size_t end = i_;
        while (end < text_.size() && is_ident_char(text_[end])) ++end;
        tok.kind = TokKind::Ident;
        tok.text = std::string(text_.substr(i_, end - i_));
        advance(end - i_);
      } else if (c >= '0' && c <= '9') {
        lex_int(tok, i_);
      } else if (c == '-' && i_ + 1 < text_.size() && text_[i_ + 1] == '>') {
        punct(tok, "->");
      } else if (c == '-' && i_ + 1 < text_.size() &&
                 text_[i_ + 1] >= '0' && text_[i_ + 1] <= '9') {
        lex_int(tok, i_);
      } else if (c == '<' && i_ + 1 < text_.size() && text_[i_ + 1] == '-') {
        punct(tok, "<-");
      } else if (c == '<' && i_ + 1 < text_.size() && text_[i_ + 1] == '>') {
        punct(tok, "<>");
      } else if (c == '"') {
        lex_string(tok);
      } else {
        punct(tok, text_.substr(i_, 1));
      }
      toks.push_back(std::move(tok));
    }
    Tok eof;
    eof.kind = TokKind::Eof;
    eof.line = line_;
    eof.column = column_;
    toks.push_back(std::move(eof));
    return toks;
  }

 private:
  void advance(std::size_t count) {
    for (std::size_t k = 0; k < count; ++k, ++i_) {
      unsigned char c = static_cast<unsigned char>(text_[i_]);
      if (c == '\n') {
        ++line_;
        column_ = 1;
      } else if ((c & 0xC0) != 0x80) {
        ++column_;
      }
    }
  }

  void punct(Tok& tok, std::string_view text) {
    tok.kind = TokKind::Punct;
    tok.text = std::string(text);
    advance(text.size());
  }

  void lex_int(Tok& tok, std::size_t start) {
    std::size_t end = start;
    if (text_[end] == '-') ++end;
    while (end < text_.size() && text_[end] >= '0' && text_[end] <= '9') {
      ++end;
    }
    std::string_view digits = text_.substr(start, end - start);
    std::int64_t value = 0;
    auto [ptr, ec] =
        std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc() || ptr != digits.data() + digits.size()) {
      fail("integer literal out of range", tok.line, tok.column);
    }
    tok.kind = TokKind::Int;
    tok.text = std::string(digits);
    tok.int_value = value;
    advance(end - start);
  }

  void lex_string(Tok& tok) {
    tok.kind = TokKind::String;
    advance(1);  // opening quote
    std::string value;
    while (true) {
      if (i_ >= text_.size() || text_[i_] == '\n') {
        fail("unterminated string literal", tok.line, tok.column);
      }
      char c = text_[i_];
      if (c == '"') {
        advance(1);
        break;
      }
      if (c == '\\') {
        if (i_ + 1 >= text_.size()) {
          fail("unterminated string literal", tok.line, tok.column);
        }
        char esc = text_[i_ + 1];
        switch (esc) {
          case '"': value += '"'; break;
          case '\\': value += '\\'; break;
          case 'n': value += '\n'; break;
          case 't': value += '\t'; break;
          case 'r': value += '\r'; break;
          default:
            fail(std::string("unknown escape '\\") + esc + "' in string",
                 line_, column_);
        }
        advance(2);
        continue;
      }
      value += c;
      advance(1);
    }
    tok.text = std::move(value);
  }

  std::string_view text_;
  std::size_t i_ = 0;
  int line_ = 1;
  int column_ = 1;
};

std::string describe(const Tok& tok) {
  switch (tok.kind) {
    case TokKind::Eof: return "end of input";
    case TokKind::String: return "string literal";
    default: return '\'' + tok.text + '\'';
  }
}

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(Lexer(text).run()) {}

  QueryAst run() {
    QueryAst ast;
    expect_keyword("match");
    ast.patterns.push_back(parse_pattern());
    while (accept_punct(",")) ast.patterns.push_back(parse_pattern());
    if (accept_keyword("where")) ast.where = parse_or_expr();
    expect_keyword("return");
    if (accept_keyword("distinct")) ast.ret.distinct = true;
    ast.ret.items.push_back(parse_item());
    while (accept_punct(",")) ast.ret.items.push_back(parse_item());
    accept_punct(";");
    if (!at_eof()) {
      fail("expected end of query, found " + describe(peek()), peek().line,
           peek().column);
    }
    return ast;
  }

 private:
  const Tok& peek() const { return toks_[pos_]; }
  const Tok& advance() { return toks_[pos_++]; }
  bool at_eof() const { return peek().kind == TokKind::Eof; }

  bool at_keyword(std::string_view kw) const {
    return peek().kind == TokKind::Ident && to_lower(peek().text) == kw;
  }
  bool at_punct(std::string_view p) const {
    return peek().kind == TokKind::Punct && peek().text == p;
  }
  bool accept_keyword(std::string_view kw) {
    if (at_keyword(kw)) {
      advance();
      return true;
    }
    return false;
  }
  bool accept_punct(std::string_view p) {
    if (at_punct(p)) {
      advance();
      return true;
    }
    return false;
  }
  void expect_keyword(std::string_view kw) {
    if (!accept_keyword(kw)) {
      fail("expected '" + std::string(kw) + "', found " + describe(peek()),
           peek().line, peek().column);
    }
  }
  void expect_punct(std::string_view p) {
    if (!accept_punct(p)) {
      fail("expected '" + std::string(p) + "', found " + describe(peek()),
           peek().line, peek().column);
    }
  }
  std::string expect_identifier(const std::string& what) {
    if (peek().kind != TokKind::Ident || is_query_keyword(peek().text)) {
      fail("expected " + what + ", found " + describe(peek()), peek().line,
           peek().column);
    }
    return advance().text;
  }

  PathPattern parse_pattern() {
    PathPattern path;
    path.nodes.push_back(parse_node());
    while (at_punct("-") || at_punct("<-")) {
      path.rels.push_back(parse_rel());
      path.nodes.push_back(parse_node());
    }
    return path;
  }

  NodePattern parse_node() {
    NodePattern node;
    node.pos = {peek().line, peek().column};
    expect_punct("(");
    if (peek().kind == TokKind::Ident && !is_query_keyword(peek().text)) {
      node.variable = advance().text;
    } else {
      node.anonymous = true;
      node.variable = "#anon" + std::to_string(anon_counter_++);
    }
    if (accept_punct(":")) {
      node.label = expect_identifier("label identifier");
    }
    if (accept_punct("{")) {
      do {
        std::string name = expect_identifier("property name");
        expect_punct(":");
        node.prop_filter.emplace_back(std::move(name), parse_literal());
      } while (accept_punct(","));
      expect_punct("}");
    }
    expect_punct(")");
    return node;
  }

  RelPattern parse_rel() {
    RelPattern rel;
    if (accept_punct("-")) {
      rel.direction = RelDirection::LeftToRight;
      expect_punct("[");
      expect_punct(":");
      rel.rel_type = expect_identifier("relationship type");
      expect_punct("]");
      expect_punct("->");
    } else {
      expect_punct("<-");
      rel.direction = RelDirection::RightToLeft;
      expect_punct("[");
      expect_punct(":");
      rel.rel_type = expect_identifier("relationship type");
      expect_punct("]");
      expect_punct("-");
    }
    return rel;
  }

  PropertyValue parse_literal() {
    const Tok& tok = peek();
    if (tok.kind == TokKind::String) return PropertyValue(advance().text);
    if (tok.kind == TokKind::Int) return PropertyValue(advance().int_value);
    if (at_keyword("true")) {
      advance();
      return PropertyValue(true);
    }
    if (at_keyword("false")) {
      advance();
      return PropertyValue(false);
    }
    fail("expected literal, found " + describe(tok), tok.line, tok.column);
  }

  WhereExprPtr parse_or_expr() {
    auto lhs = parse_and_expr();
    while (accept_keyword("or")) {
      auto rhs = parse_and_expr();
      auto node = std::make_unique<WhereExpr>();
      node->node = WhereExpr::Or{std::move(lhs), std::move(rhs)};
      lhs = std::move(node);
    }
    return lhs;
  }

  WhereExprPtr parse_and_expr() {
    auto lhs = parse_unary_expr();
    while (accept_keyword("and")) {
      auto rhs = parse_unary_expr();
      auto node = std::make_unique<WhereExpr>();
      node->node = WhereExpr::And{std::move(lhs), std::move(rhs)};
      lhs = std::move(node);
    }
    return lhs;
  }

  WhereExprPtr parse_unary_expr() {
    if (accept_keyword("not")) {
      auto node = std::make_unique<WhereExpr>();
      node->node = WhereExpr::Not{parse_unary_expr()};
      return node;
    }
    return parse_primary_expr();
  }

  WhereExprPtr parse_primary_expr() {
    if (at_punct("(")) {
      // A '(' opens either a path pattern or a parenthesized expression;
      // try the pattern first, backtrack on failure.
      std::size_t saved_pos = pos_;
      int saved_anon = anon_counter_;
      try {
        auto node = std::make_unique<WhereExpr>();
        node->node = WhereExpr::Pattern{parse_pattern()};
        return node;
      } catch (const ParseFail&) {
        pos_ = saved_pos;
        anon_counter_ = saved_anon;
      }
      expect_punct("(");
      auto inner = parse_or_expr();
      expect_punct(")");
      return inner;
    }
    return parse_comparison();
  }

  WhereExprPtr parse_comparison() {
    WhereExpr::Compare cmp;
    cmp.pos = {peek().line, peek().column};
    cmp.variable = expect_identifier("variable");
    expect_punct(".");
    cmp.property = expect_identifier("property name");
    if (accept_punct("=")) {
      cmp.op = CompareOp::Eq;
    } else if (accept_punct("<>")) {
      cmp.op = CompareOp::Ne;
    } else {
      fail("expected '=' or '<>', found " + describe(peek()), peek().line,
           peek().column);
    }
    cmp.literal = parse_literal();
    auto node = std::make_unique<WhereExpr>();
    node->node = std::move(cmp);
    return node;
  }

  ReturnItem parse_item() {
    ReturnItem item;
    item.pos = {peek().line, peek().column};
    if (at_keyword("count")) {
      advance();
      expect_punct("(");
      if (accept_punct("*")) {
        item.kind = ReturnItem::Kind::CountStar;
      } else {
        item.kind = ReturnItem::Kind::CountVariable;
        item.variable = expect_identifier("variable or '*'");
      }
      expect_punct(")");
      return item;
    }
    item.variable = expect_identifier("variable");
    if (accept_punct(".")) {
      item.kind = ReturnItem::Kind::Property;
      item.property = expect_identifier("property name");
    } else {
      item.kind = ReturnItem::Kind::Variable;
    }
    return item;
  }

  std::vector<Tok> toks_;
  std::size_t pos_ = 0;
  int anon_counter_ = 0;
};

void check_where(const WhereExpr& expr,
                 const std::set<std::string>& bound,
                 std::optional<Diagnostic>& error) {
  if (error) return;
  if (const auto* pattern = std::get_if<WhereExpr::Pattern>(&expr.node)) {
    for (const auto& node : pattern->path.nodes) {
      if (!node.anonymous && !bound.contains(node.variable)) {
        Diagnostic d;
        d.code = DiagCode::UnboundVariable;
        d.message = "variable '" + node.variable +
                    "' is not bound by any match pattern";
        d.source_name = "query";
        d.line = node.pos.line;
        d.column = node.pos.column;
        error = std::move(d);
        return;
      }
    }
  } else if (const auto* cmp = std::get_if<WhereExpr::Compare>(&expr.node)) {
    if (!bound.contains(cmp->variable)) {
      Diagnostic d;
      d.code = DiagCode::UnboundVariable;
      d.message = "variable '" + cmp->variable +
                  "' is not bound by any match pattern";
      d.source_name = "query";
      d.line = cmp->pos.line;
      d.column = cmp->pos.column;
      error = std::move(d);
    }
  } else if (const auto* conj = std::get_if<WhereExpr::And>(&expr.node)) {
    check_where(*conj->lhs, bound, error);
    check_where(*conj->rhs, bound, error);
  } else if (const auto* disj = std::get_if<WhereExpr::Or>(&expr.node)) {
    check_where(*disj->lhs, bound, error);
    check_where(*disj->rhs, bound, error);
  } else if (const auto* neg = std::get_if<WhereExpr::Not>(&expr.node)) {
    check_where(*neg->child, bound, error);
  }
}

}  // namespace

std::optional<Diagnostic> check_query(const QueryAst& ast) {
  std::set<std::string> bound;
  for (const auto& pattern : ast.patterns) {
    for (const auto& node : pattern.nodes) {
      if (!node.anonymous) bound.insert(node.variable);
    }
  }

  std::optional<Diagnostic> error;
  if (ast.where) check_where(*ast.where, bound, error);
  if (error) return error;

  bool has_aggregate = false;
  bool has_plain = false;
  for (const auto& item : ast.ret.items) {
    if (item.is_aggregate()) {
      has_aggregate = true;
    } else {
      has_plain = true;
    }
    if (item.kind != ReturnItem::Kind::CountStar &&
        !bound.contains(item.variable)) {
      Diagnostic d;
      d.code = DiagCode::UnboundVariable;
      d.message = "variable '" + item.variable +
                  "' is not bound by any match pattern";
      d.source_name = "query";
      d.line = item.pos.line;
      d.column = item.pos.column;
      return d;
    }
  }
  if (has_aggregate && has_plain) {
    Diagnostic d;
    d.code = DiagCode::MixedAggregates;
    d.message = "aggregates and non-aggregates cannot be mixed in one "
                "return clause";
    d.source_name = "query";
    d.line = ast.ret.items.front().pos.line;
    d.column = ast.ret.items.front().pos.column;
    return d;
  }
  return std::nullopt;
}

QueryParseResult parse_query(std::string_view text) {
  QueryParseResult result;
  try {
    QueryAst ast = Parser(text).run();
    if (auto semantic_error = check_query(ast)) {
      result.error = std::move(semantic_error);
      return result;
    }
    result.ast = std::move(ast);
  } catch (const ParseFail& f) {
    result.error = f.diagnostic;
  }
  return result;
}

std::string ReturnItem::column_name() const {
  switch (kind) {
    case Kind::Variable: return variable;
    case Kind::Property: return variable + '.' + property;
    case Kind::CountStar: return "count(*)";
    case Kind::CountVariable: return "count(" + variable + ')';
  }
  return {};
}

std::vector<std::string> match_variables(const QueryAst& ast) {
  std::vector<std::string> vars;
  std::set<std::string> seen;
  for (const auto& pattern : ast.patterns) {
    for (const auto& node : pattern.nodes) {
      if (seen.insert(node.variable).second) vars.push_back(node.variable);
    }
  }
  return vars;
}

}  // namespace rpslrepo::query
