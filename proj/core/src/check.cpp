#include <algorithm>
#include <variant>

#include "odd/errors.hpp"
#include "odd/spec.hpp"

namespace odd {
namespace {

/// Literal as it would be stored for the attribute: integer-written literals
/// widen to reals on real attributes.
AttributeValue coerce_literal(const AttributeType& type, const AttributeValue& literal) {
  if (std::holds_alternative<RealType>(type) && literal.kind() == AttributeValue::Kind::Int)
    return AttributeValue::real(static_cast<double>(literal.as_int()));
  return literal;
}

bool kind_matches(const AttributeType& type, AttributeValue::Kind k) {
  using K = AttributeValue::Kind;
  if (std::holds_alternative<EnumType>(type)) return k == K::Enum;
  if (std::holds_alternative<BoolType>(type)) return k == K::Bool;
  if (std::holds_alternative<RealType>(type)) return k == K::Real || k == K::Int;
  return k == K::Int;
}

const char* kind_name(const AttributeType& type) {
  if (std::holds_alternative<EnumType>(type)) return "enum";
  if (std::holds_alternative<BoolType>(type)) return "bool";
  if (std::holds_alternative<RealType>(type)) return "real";
  return "int";
}

std::size_t check_atom(const Atom& atom, const Taxonomy& taxonomy, std::vector<std::string>& warnings) {
  const std::string text = to_string(atom);
  auto index = taxonomy.find(atom.attribute);
  if (!index) throw UnknownAttributeError(text, "unknown attribute '" + atom.attribute + "'");
  const Attribute& attr = taxonomy.at(*index);

  if (!kind_matches(attr.type, atom.literal.kind()))
    throw LiteralKindError(text, std::string(to_string(atom.literal.kind())) + " literal for " +
                                     kind_name(attr.type) + " attribute '" + attr.name + "'");

  if (is_ordering(atom.predicate) && !is_ordered(attr.type))
    throw PredicateNotApplicableError(text, std::string("predicate '") + to_string(atom.predicate) +
                                                "' is not defined for " + kind_name(attr.type) + " attribute '" +
                                                attr.name + "'" +
                                                (std::holds_alternative<EnumType>(attr.type)
                                                     ? " (mark the enum \"ordered\" to compare labels)"
                                                     : ""));

  if (atom.unit) {
    auto declared = unit_of(attr.type);
    if (!declared || *declared != *atom.unit)
      throw UnitMismatchError(text, "unit '" + *atom.unit + "' does not match " +
                                        (declared ? "declared unit '" + std::string(*declared) + "'"
                                                  : std::string("unitless attribute")));
  }

  if (!value_in_domain(attr, coerce_literal(attr.type, atom.literal)))
    throw LiteralDomainError(text, "literal is outside the domain " + describe(attr.type));

  if (atom.predicate == Predicate::Eq && std::holds_alternative<RealType>(attr.type)) {
    std::string w = "`" + text + "`: exact equality on real attribute '" + attr.name + "'";
    if (std::find(warnings.begin(), warnings.end(), w) == warnings.end()) warnings.push_back(std::move(w));
  }

  return *index;
}

void walk(const SpecAst& ast, const Taxonomy& taxonomy, std::vector<bool>& seen, std::vector<std::string>& warnings) {
  switch (ast.kind()) {
    case SpecAst::Kind::Atom: seen[check_atom(ast.atom(), taxonomy, warnings)] = true; break;
    case SpecAst::Kind::Not: walk(ast.operand(), taxonomy, seen, warnings); break;
    case SpecAst::Kind::And:
      walk(ast.lhs(), taxonomy, seen, warnings);
      walk(ast.rhs(), taxonomy, seen, warnings);
      break;
  }
}

}  // namespace

WellFormedSpec check_spec(const SpecAst& ast, const Taxonomy& taxonomy) {
  WellFormedSpec spec(ast, taxonomy);
  std::vector<bool> seen(taxonomy.size(), false);
  walk(ast, taxonomy, seen, spec.warnings_);
  for (std::size_t i = 0; i < seen.size(); ++i) {
    if (!seen[i]) continue;
    spec.mentioned_.push_back(taxonomy.at(i).name);
    spec.mentioned_idx_.push_back(i);
  }
  return spec;
}

}  // namespace odd
