#include "rpslrepo/dsl_lexer.hpp"

#include <array>
#include <algorithm>

namespace rpslrepo::dsl {

namespace {

constexpr std::array<std::string_view, 8> kKeywords = {
    "type", "extends", "sensor", "processor", "graph", "node", "in", "out"};

bool is_ident_start(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_';
}

bool is_ident_char(char c) {
  return is_ident_start(c) || (c >= '0' && c <= '9');
}

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' ||
         c == '\f';
}

}  // namespace

bool is_keyword(std::string_view word) {
  return std::find(kKeywords.begin(), kKeywords.end(), word) !=
         kKeywords.end();
}

bool is_identifier(std::string_view word) {
  if (word.empty() || is_keyword(word)) return false;
  if (!is_ident_start(word.front())) return false;
  return std::all_of(word.begin(), word.end(), is_ident_char);
}

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  int line = 1;
  int column = 1;

  auto advance = [&](std::size_t count) {
    for (std::size_t k = 0; k < count; ++k, ++i) {
      unsigned char c = static_cast<unsigned char>(text[i]);
      if (c == '\n') {
        ++line;
        column = 1;
      } else if ((c & 0xC0) != 0x80) {  // UTF-8 continuation bytes: no move
        ++column;
      }
    }
  };

  while (i < text.size()) {
    char c = text[i];
    if (is_space(c)) {
      advance(1);
      continue;
    }
    if (c == '#') {
      std::size_t end = text.find('\n', i);
      advance((end == std::string_view::npos ? text.size() : end) - i);
      continue;
    }

    Token tok;
    tok.line = line;
    tok.column = column;
    tok.offset = i;

    if (is_ident_start(c)) {
      std::size_t end = i;
      while (end < text.size() && is_ident_char(text[end])) ++end;
      tok.text = std::string(text.substr(i, end - i));
      tok.kind = is_keyword(tok.text) ? TokenKind::Keyword
                                      : TokenKind::Identifier;
      advance(end - i);
    } else if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
      tok.kind = TokenKind::Punct;
      tok.text = "->";
      advance(2);
    } else {
      // Single-char punct; anything outside the grammar's alphabet still
      // becomes a token so the parser can report it with a position.
      tok.kind = TokenKind::Punct;
      tok.text = std::string(1, c);
      advance(1);
    }
    tokens.push_back(std::move(tok));
  }

  Token eof;
  eof.kind = TokenKind::Eof;
  eof.line = line;
  eof.column = column;
  eof.offset = text.size();
  tokens.push_back(std::move(eof));
  return tokens;
}

}  // namespace rpslrepo::dsl
