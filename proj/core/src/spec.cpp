#include "odd/spec.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "lexer.hpp"
#include "odd/errors.hpp"

namespace odd {

using detail::Token;
using detail::TokenKind;

const char* to_string(Predicate p) noexcept {
  switch (p) {
    case Predicate::Eq: return "==";
    case Predicate::Lt: return "<";
    case Predicate::Gt: return ">";
    case Predicate::Le: return "<=";
    case Predicate::Ge: return ">=";
  }
  return "?";
}

bool is_ordering(Predicate p) noexcept { return p != Predicate::Eq; }

std::string to_string(const Atom& atom) {
  std::string s = atom.attribute;
  s += ' ';
  s += to_string(atom.predicate);
  s += ' ';
  s += to_string(atom.literal);
  if (atom.unit) {
    s += ' ';
    s += *atom.unit;
  }
  return s;
}

// ---------------------------------------------------------------------------
// SpecAst

struct SpecAst::Node {
  Kind kind;
  std::size_t depth;
  Atom atom;
  std::optional<SpecAst> lhs;  // Not operand, or And lhs
  std::optional<SpecAst> rhs;
};

SpecAst SpecAst::atom(Atom a) {
  return SpecAst(std::make_shared<const Node>(Node{Kind::Atom, 1, std::move(a), std::nullopt, std::nullopt}));
}

SpecAst SpecAst::negate(SpecAst operand) {
  std::size_t d = operand.depth() + 1;
  return SpecAst(std::make_shared<const Node>(Node{Kind::Not, d, {}, std::move(operand), std::nullopt}));
}

SpecAst SpecAst::conjoin(SpecAst lhs, SpecAst rhs) {
  std::size_t d = std::max(lhs.depth(), rhs.depth()) + 1;
  return SpecAst(std::make_shared<const Node>(Node{Kind::And, d, {}, std::move(lhs), std::move(rhs)}));
}

SpecAst::Kind SpecAst::kind() const noexcept { return node_->kind; }
std::size_t SpecAst::depth() const noexcept { return node_->depth; }

const Atom& SpecAst::atom() const {
  if (node_->kind != Kind::Atom) throw std::logic_error("SpecAst::atom on non-atom node");
  return node_->atom;
}

const SpecAst& SpecAst::operand() const {
  if (node_->kind != Kind::Not) throw std::logic_error("SpecAst::operand on non-negation node");
  return *node_->lhs;
}

const SpecAst& SpecAst::lhs() const {
  if (node_->kind != Kind::And) throw std::logic_error("SpecAst::lhs on non-conjunction node");
  return *node_->lhs;
}

const SpecAst& SpecAst::rhs() const {
  if (node_->kind != Kind::And) throw std::logic_error("SpecAst::rhs on non-conjunction node");
  return *node_->rhs;
}

bool operator==(const SpecAst& a, const SpecAst& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.depth() != b.depth()) return false;
  switch (a.kind()) {
    case SpecAst::Kind::Atom: return a.atom() == b.atom();
    case SpecAst::Kind::Not: return a.operand() == b.operand();
    case SpecAst::Kind::And: return a.lhs() == b.lhs() && a.rhs() == b.rhs();
  }
  return false;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(detail::tokenize(text)) {}

  SpecAst run() {
    if (peek().kind == TokenKind::End) throw SpecSyntaxError(peek().pos, "empty specification");
    SpecAst ast = expr(0);
    if (peek().kind != TokenKind::End) unexpected("'and', 'or' or end of input");
    return ast;
  }

 private:
  const Token& peek() const { return tokens_[i_]; }
  const Token& take() { return tokens_[i_++]; }

  [[noreturn]] void unexpected(const char* expected) const {
    throw SpecSyntaxError(peek().pos, std::string("expected ") + expected + ", found " + detail::describe(peek().kind));
  }

  SpecAst bounded(SpecAst ast, SourcePos pos) const {
    if (ast.depth() > kMaxSpecDepth) throw SpecSyntaxError(pos, "specification nests too deeply");
    return ast;
  }

  // expr := term (("and" | "or") term)*, one connective per level.
  SpecAst expr(std::size_t nesting) {
    SpecAst lhs = term(nesting);
    std::optional<TokenKind> connective;
    while (peek().kind == TokenKind::KwAnd || peek().kind == TokenKind::KwOr) {
      const Token& op = take();
      if (connective && *connective != op.kind)
        throw SpecSyntaxError(op.pos, "mixing 'and' and 'or' requires parentheses");
      connective = op.kind;
      SpecAst rhs = term(nesting);
      if (op.kind == TokenKind::KwAnd) {
        lhs = bounded(SpecAst::conjoin(std::move(lhs), std::move(rhs)), op.pos);
      } else {
        // a or b  =>  not (not a and not b)
        lhs = bounded(SpecAst::negate(SpecAst::conjoin(SpecAst::negate(std::move(lhs)),
                                                       SpecAst::negate(std::move(rhs)))),
                      op.pos);
      }
    }
    return lhs;
  }

  // term := "not" term | "(" expr ")" | atom
  SpecAst term(std::size_t nesting) {
    if (nesting > kMaxSpecDepth) throw SpecSyntaxError(peek().pos, "specification nests too deeply");
    const Token& t = peek();
    switch (t.kind) {
      case TokenKind::KwNot:
        take();
        return bounded(SpecAst::negate(term(nesting + 1)), t.pos);
      case TokenKind::LParen: {
        take();
        SpecAst inner = expr(nesting + 1);
        if (peek().kind != TokenKind::RParen) unexpected("')'");
        take();
        return inner;
      }
      case TokenKind::Ident: return SpecAst::atom(atom());
      default: unexpected("'not', '(' or an attribute name");
    }
  }

  // atom := IDENT OP literal [unit]
  Atom atom() {
    Atom a;
    a.attribute = std::string(take().text);
    switch (peek().kind) {
      case TokenKind::Eq: a.predicate = Predicate::Eq; break;
      case TokenKind::Lt: a.predicate = Predicate::Lt; break;
      case TokenKind::Gt: a.predicate = Predicate::Gt; break;
      case TokenKind::Le: a.predicate = Predicate::Le; break;
      case TokenKind::Ge: a.predicate = Predicate::Ge; break;
      default: unexpected("a predicate ('==', '<', '>', '<=', '>=')");
    }
    take();

    const Token& lit = peek();
    if (lit.kind == TokenKind::Number) {
      take();
      a.literal = number(lit);
      if (peek().kind == TokenKind::Ident) a.unit = std::string(take().text);
    } else if (lit.kind == TokenKind::Ident) {
      take();
      if (lit.text == "true" || lit.text == "false") {
        a.literal = AttributeValue::boolean(lit.text == "true");
      } else {
        a.literal = AttributeValue::label(std::string(lit.text));
      }
      if (peek().kind == TokenKind::Ident)
        throw SpecSyntaxError(peek().pos, "unit '" + std::string(peek().text) + "' is only allowed after a number");
    } else {
      unexpected("a literal");
    }
    return a;
  }

  static AttributeValue number(const Token& t) {
    const char* first = t.text.data();
    const char* last = first + t.text.size();
    if (t.text.find('.') != std::string_view::npos) {
      double v = 0;
      auto [p, ec] = std::from_chars(first, last, v);
      if (ec != std::errc{} || p != last || !std::isfinite(v))
        throw SpecSyntaxError(t.pos, "real literal out of range");
      return AttributeValue::real(v);
    }
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || p != last) throw SpecSyntaxError(t.pos, "integer literal out of range");
    return AttributeValue::integer(v);
  }

  std::vector<Token> tokens_;
  std::size_t i_ = 0;
};

void write(const SpecAst& ast, std::string& out);

void write_operand(const SpecAst& ast, std::string& out, bool parenthesize_and) {
  bool parens = parenthesize_and && ast.kind() == SpecAst::Kind::And;
  if (parens) out += '(';
  write(ast, out);
  if (parens) out += ')';
}

void write(const SpecAst& ast, std::string& out) {
  switch (ast.kind()) {
    case SpecAst::Kind::Atom: out += to_string(ast.atom()); break;
    case SpecAst::Kind::Not:
      out += "not ";
      write_operand(ast.operand(), out, true);
      break;
    case SpecAst::Kind::And:
      // Left-associative chains need no parentheses on the left.
      write_operand(ast.lhs(), out, false);
      out += " and ";
      write_operand(ast.rhs(), out, true);
      break;
  }
}

void collect(const SpecAst& ast, std::vector<Atom>& out) {
  switch (ast.kind()) {
    case SpecAst::Kind::Atom:
      if (std::find(out.begin(), out.end(), ast.atom()) == out.end()) out.push_back(ast.atom());
      break;
    case SpecAst::Kind::Not: collect(ast.operand(), out); break;
    case SpecAst::Kind::And:
      collect(ast.lhs(), out);
      collect(ast.rhs(), out);
      break;
  }
}

}  // namespace

SpecAst parse_spec(std::string_view text) { return Parser(text).run(); }

std::string serialize_spec(const SpecAst& ast) {
  std::string out;
  write(ast, out);
  return out;
}

std::vector<Atom> atoms(const SpecAst& ast) {
  std::vector<Atom> out;
  collect(ast, out);
  return out;
}

}  // namespace odd
