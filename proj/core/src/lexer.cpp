#include "lexer.hpp"

namespace odd::detail {
namespace {

bool is_lower(char c) { return c >= 'a' && c <= 'z'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_ident_tail(char c) { return is_lower(c) || is_digit(c) || c == '_'; }
bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v'; }

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_blank();
      SourcePos start = pos_;
      if (i_ >= text_.size()) {
        out.push_back({TokenKind::End, {}, start});
        return out;
      }
      std::size_t begin = i_;
      char c = text_[i_];
      TokenKind kind;
      if (is_lower(c)) {
        while (i_ < text_.size() && is_ident_tail(text_[i_])) bump();
        if (i_ < text_.size() && text_[i_] >= 'A' && text_[i_] <= 'Z')
          throw SpecSyntaxError(pos_, "identifiers are lower-case");
        kind = keyword_or_ident(text_.substr(begin, i_ - begin));
      } else if (is_digit(c) || (c == '-' && i_ + 1 < text_.size() && is_digit(text_[i_ + 1]))) {
        lex_number();
        kind = TokenKind::Number;
      } else if (c == '=') {
        bump();
        if (i_ >= text_.size() || text_[i_] != '=') throw SpecSyntaxError(start, "expected '==' (single '=' is not an operator)");
        bump();
        kind = TokenKind::Eq;
      } else if (c == '<' || c == '>') {
        bump();
        bool eq = i_ < text_.size() && text_[i_] == '=';
        if (eq) bump();
        kind = c == '<' ? (eq ? TokenKind::Le : TokenKind::Lt) : (eq ? TokenKind::Ge : TokenKind::Gt);
      } else if (c == '(') {
        bump();
        kind = TokenKind::LParen;
      } else if (c == ')') {
        bump();
        kind = TokenKind::RParen;
      } else {
        auto byte = static_cast<unsigned char>(c);
        std::string shown = byte >= 0x20 && byte < 0x7f ? std::string("'") + c + "'" : "byte 0x" + hex(byte);
        throw SpecSyntaxError(start, "unexpected character " + shown);
      }
      out.push_back({kind, text_.substr(begin, i_ - begin), start});
    }
  }

 private:
  static std::string hex(unsigned char b) {
    const char* digits = "0123456789abcdef";
    return {digits[b >> 4], digits[b & 0xf]};
  }

  static TokenKind keyword_or_ident(std::string_view word) {
    if (word == "and") return TokenKind::KwAnd;
    if (word == "or") return TokenKind::KwOr;
    if (word == "not") return TokenKind::KwNot;
    return TokenKind::Ident;
  }

  void bump() {
    if (text_[i_] == '\n') {
      ++pos_.line;
      pos_.column = 1;
    } else {
      ++pos_.column;
    }
    ++i_;
  }

  void skip_blank() {
    while (i_ < text_.size()) {
      char c = text_[i_];
      if (is_space(c)) {
        bump();
      } else if (c == '#') {
        while (i_ < text_.size() && text_[i_] != '\n') ++i_, ++pos_.column;
      } else {
        break;
      }
    }
  }

  void lex_number() {
    if (text_[i_] == '-') bump();
    while (i_ < text_.size() && is_digit(text_[i_])) bump();
    if (i_ < text_.size() && text_[i_] == '.') {
      bump();
      if (i_ >= text_.size() || !is_digit(text_[i_])) throw SpecSyntaxError(pos_, "expected digits after '.'");
      while (i_ < text_.size() && is_digit(text_[i_])) bump();
    }
    if (i_ < text_.size() && (is_ident_tail(text_[i_]) || text_[i_] == '.'))
      throw SpecSyntaxError(pos_, "malformed number (separate a unit with whitespace)");
  }

  std::string_view text_;
  std::size_t i_ = 0;
  SourcePos pos_;
};

}  // namespace

const char* describe(TokenKind k) noexcept {
  switch (k) {
    case TokenKind::Ident: return "identifier";
    case TokenKind::Number: return "number";
    case TokenKind::KwAnd: return "'and'";
    case TokenKind::KwOr: return "'or'";
    case TokenKind::KwNot: return "'not'";
    case TokenKind::Eq: return "'=='";
    case TokenKind::Lt: return "'<'";
    case TokenKind::Gt: return "'>'";
    case TokenKind::Le: return "'<='";
    case TokenKind::Ge: return "'>='";
    case TokenKind::LParen: return "'('";
    case TokenKind::RParen: return "')'";
    case TokenKind::End: return "end of input";
  }
  return "?";
}

std::vector<Token> tokenize(std::string_view text) { return Lexer(text).run(); }

}  // namespace odd::detail
