#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace rpslrepo::dsl {

enum class TokenKind { Keyword, Identifier, Punct, Eof };

// line/column are 1-based; column counts characters (UTF-8 continuation
// bytes do not advance it). offset/length locate the token's bytes, so the
// token stream tiles the input up to whitespace and comments.
struct Token {
  TokenKind kind = TokenKind::Eof;
  std::string text;
  int line = 1;
  int column = 1;
  std::size_t offset = 0;
};

bool is_keyword(std::string_view word);
bool is_identifier(std::string_view word);

// Total over arbitrary bytes: unknown characters come back as single-char
// punct tokens for the parser to reject. Comments run from '#' to end of
// line. The final token is always Eof, positioned one past the input.
std::vector<Token> lex(std::string_view text);

}  // namespace rpslrepo::dsl
