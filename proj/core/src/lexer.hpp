#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "odd/errors.hpp"

namespace odd::detail {

enum class TokenKind {
  Ident,
  Number,
  KwAnd,
  KwOr,
  KwNot,
  Eq,  // ==
  Lt,
  Gt,
  Le,
  Ge,
  LParen,
  RParen,
  End,
};

struct Token {
  TokenKind kind;
  std::string_view text;
  SourcePos pos;
};

const char* describe(TokenKind k) noexcept;

/// Splits spec text into tokens, dropping whitespace and `#` comments.
/// The returned views alias `text`. Always ends with an End token.
std::vector<Token> tokenize(std::string_view text);

}  // namespace odd::detail
