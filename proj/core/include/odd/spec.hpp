#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "odd/taxonomy.hpp"
#include "odd/value.hpp"

namespace odd {

enum class Predicate { Eq, Lt, Gt, Le, Ge };

/// Concrete spelling: `==`, `<`, `>`, `<=`, `>=`.
const char* to_string(Predicate p) noexcept;
bool is_ordering(Predicate p) noexcept;

/// A statement `attribute <op> literal [unit]`.
///
/// Identifier literals are carried as enum labels, except `true`/`false`
/// which become booleans. Numbers written without a fraction are integers.
struct Atom {
  std::string attribute;
  Predicate predicate = Predicate::Eq;
  AttributeValue literal;
  std::optional<std::string> unit;

  friend bool operator==(const Atom&, const Atom&) = default;
};

/// Canonical text of one atom, e.g. `operational_speed < 60 kmh`.
std::string to_string(const Atom& atom);

/// Abstract syntax of a specification: atoms closed under negation and
/// binary conjunction. Immutable; copies share subtrees.
class SpecAst {
 public:
  enum class Kind { Atom, Not, And };

  static SpecAst atom(Atom a);
  static SpecAst negate(SpecAst operand);
  static SpecAst conjoin(SpecAst lhs, SpecAst rhs);

  Kind kind() const noexcept;
  const Atom& atom() const;        // Kind::Atom
  const SpecAst& operand() const;  // Kind::Not
  const SpecAst& lhs() const;      // Kind::And
  const SpecAst& rhs() const;      // Kind::And

  std::size_t depth() const noexcept;

  friend bool operator==(const SpecAst& a, const SpecAst& b);

 private:
  struct Node;
  explicit SpecAst(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// Maximum AST depth the parser will build.
inline constexpr std::size_t kMaxSpecDepth = 4096;

/// Parses spec text. `a or b` is rewritten to `not (not a and not b)`, so the
/// result contains only atoms, `not` and `and`. Mixing `and` with `or` at one
/// level without parentheses is rejected.
SpecAst parse_spec(std::string_view text);

/// Canonical text: single spaces, `and`/`not` only, parentheses only where
/// the grammar needs them.
std::string serialize_spec(const SpecAst& ast);

/// Distinct atoms in left-to-right order of first occurrence.
std::vector<Atom> atoms(const SpecAst& ast);

/// A spec that has passed `check_spec` against a particular taxonomy.
class WellFormedSpec {
 public:
  const SpecAst& ast() const noexcept { return ast_; }
  const std::string& taxonomy_version() const noexcept { return taxonomy_.version(); }
  const Taxonomy& taxonomy() const noexcept { return taxonomy_; }
  /// Names of attributes the spec constrains, in taxonomy order.
  const std::vector<std::string>& mentioned_attributes() const noexcept { return mentioned_; }
  /// Taxonomy positions of `mentioned_attributes()`.
  const std::vector<std::size_t>& mentioned_indices() const noexcept { return mentioned_idx_; }
  /// Non-fatal findings, e.g. exact equality on a real attribute.
  const std::vector<std::string>& warnings() const noexcept { return warnings_; }

 private:
  friend WellFormedSpec check_spec(const SpecAst&, const Taxonomy&);
  WellFormedSpec(SpecAst ast, Taxonomy taxonomy) : ast_(std::move(ast)), taxonomy_(std::move(taxonomy)) {}

  SpecAst ast_;
  Taxonomy taxonomy_;
  std::vector<std::string> mentioned_;
  std::vector<std::size_t> mentioned_idx_;
  std::vector<std::string> warnings_;
};

/// Checks every atom against the taxonomy: the attribute exists, the literal
/// has the right kind and lies in the domain, ordering predicates are only
/// used on ordered types, and any unit tag equals the declared unit.
/// Throws a SpecCheckError subclass on the first failing atom.
WellFormedSpec check_spec(const SpecAst& ast, const Taxonomy& taxonomy);

}  // namespace odd
