#include "odd/evaluator.hpp"

#include <algorithm>

#include "odd/errors.hpp"

namespace odd {

const char* to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::True: return "true";
    case Verdict::False: return "false";
    case Verdict::Unknown: return "unknown";
  }
  return "?";
}

namespace {

template <typename T>
bool apply(Predicate p, const T& lhs, const T& rhs) {
  switch (p) {
    case Predicate::Eq: return lhs == rhs;
    case Predicate::Lt: return lhs < rhs;
    case Predicate::Gt: return lhs > rhs;
    case Predicate::Le: return lhs <= rhs;
    case Predicate::Ge: return lhs >= rhs;
  }
  return false;
}

[[noreturn]] void mismatch(const Atom& atom, const std::string& why) {
  throw MismatchError("cannot evaluate `" + to_string(atom) + "`: " + why);
}

/// Two-valued comparison of a measured value against the atom's literal.
bool compare(const Atom& atom, const Attribute& attr, const AttributeValue& value) {
  using K = AttributeValue::Kind;
  const AttributeValue& lit = atom.literal;

  if (const auto* e = std::get_if<EnumType>(&attr.type)) {
    if (value.kind() != K::Enum || lit.kind() != K::Enum) mismatch(atom, "expected enum values");
    if (atom.predicate == Predicate::Eq) return value.as_label() == lit.as_label();
    if (!e->ordered) mismatch(atom, "ordering predicate on unordered enum");
    auto a = e->index_of(value.as_label());
    auto b = e->index_of(lit.as_label());
    if (!a || !b) mismatch(atom, "undeclared label");
    return apply(atom.predicate, *a, *b);
  }
  if (std::holds_alternative<BoolType>(attr.type)) {
    if (value.kind() != K::Bool || lit.kind() != K::Bool) mismatch(atom, "expected bool values");
    if (atom.predicate != Predicate::Eq) mismatch(atom, "ordering predicate on bool");
    return value.as_bool() == lit.as_bool();
  }
  if (std::holds_alternative<RealType>(attr.type)) {
    if (value.kind() != K::Real) mismatch(atom, "expected a real value");
    double rhs = 0.0;
    if (lit.kind() == K::Real) {
      rhs = lit.as_real();
    } else if (lit.kind() == K::Int) {
      rhs = static_cast<double>(lit.as_int());
    } else {
      mismatch(atom, "expected a numeric literal");
    }
    return apply(atom.predicate, value.as_real(), rhs);
  }
  if (value.kind() != K::Int || lit.kind() != K::Int) mismatch(atom, "expected integer values");
  return apply(atom.predicate, value.as_int(), lit.as_int());
}

Verdict eval_atom_values(const Atom& atom, const ValueTuple& values, const Taxonomy& taxonomy) {
  auto index = taxonomy.find(atom.attribute);
  if (!index) mismatch(atom, "attribute not in taxonomy");
  if (values.size() != taxonomy.size())
    mismatch(atom, "sample has " + std::to_string(values.size()) + " values, taxonomy has " +
                       std::to_string(taxonomy.size()));
  const AttributeValue& v = values[*index];
  if (v.is_unknown()) return Verdict::Unknown;
  return to_verdict(compare(atom, taxonomy.at(*index), v));
}

Verdict eval_tree(const SpecAst& ast, const ValueTuple& values, const Taxonomy& taxonomy) {
  switch (ast.kind()) {
    case SpecAst::Kind::Atom: return eval_atom_values(ast.atom(), values, taxonomy);
    case SpecAst::Kind::Not: return verdict_not(eval_tree(ast.operand(), values, taxonomy));
    case SpecAst::Kind::And:
      return verdict_and(eval_tree(ast.lhs(), values, taxonomy), eval_tree(ast.rhs(), values, taxonomy));
  }
  return Verdict::Unknown;
}

void check_lod(const WellFormedSpec& spec, const Lod& lod) {
  if (lod.taxonomy_version != spec.taxonomy_version())
    throw MismatchError("sample uses taxonomy version '" + lod.taxonomy_version + "', spec was checked against '" +
                        spec.taxonomy_version() + "'");
}

void collect_positive(const SpecAst& ast, bool positive, std::vector<Atom>& out) {
  switch (ast.kind()) {
    case SpecAst::Kind::Atom:
      if (positive && std::find(out.begin(), out.end(), ast.atom()) == out.end()) out.push_back(ast.atom());
      break;
    case SpecAst::Kind::Not: collect_positive(ast.operand(), !positive, out); break;
    case SpecAst::Kind::And:
      collect_positive(ast.lhs(), positive, out);
      collect_positive(ast.rhs(), positive, out);
      break;
  }
}

}  // namespace

Verdict eval_atom(const Atom& atom, const Lod& lod, const Taxonomy& taxonomy) {
  if (lod.taxonomy_version != taxonomy.version()) mismatch(atom, "sample and taxonomy versions differ");
  return eval_atom_values(atom, lod.values, taxonomy);
}

Verdict eval_spec(const WellFormedSpec& spec, const ValueTuple& values) {
  if (values.size() != spec.taxonomy().size())
    throw MismatchError("sample has " + std::to_string(values.size()) + " values, taxonomy has " +
                        std::to_string(spec.taxonomy().size()));
  return eval_tree(spec.ast(), values, spec.taxonomy());
}

Verdict eval_spec(const WellFormedSpec& spec, const Lod& lod) {
  check_lod(spec, lod);
  return eval_spec(spec, lod.values);
}

bool in_odd(const WellFormedSpec& spec, const Lod& lod) {
  check_lod(spec, lod);
  if (lod.values.size() != spec.taxonomy().size()) throw MismatchError("sample arity does not match taxonomy");
  for (std::size_t i : spec.mentioned_indices()) {
    if (lod.values[i].is_unknown())
      throw UnknownValueError("ODD membership is undefined: attribute '" + spec.taxonomy().at(i).name +
                              "' is unknown");
  }
  return eval_spec(spec, lod.values) == Verdict::True;
}

OddEnumeration::OddEnumeration(const Taxonomy& taxonomy, WellFormedSpec spec)
    : od_(taxonomy), spec_(std::move(spec)) {
  if (spec_.taxonomy_version() != taxonomy.version())
    throw MismatchError("spec was checked against taxonomy version '" + spec_.taxonomy_version() + "', not '" +
                        taxonomy.version() + "'");
}

std::optional<ValueTuple> OddEnumeration::next() {
  while (auto tuple = od_.next()) {
    if (eval_spec(spec_, *tuple) == Verdict::True) return tuple;
  }
  return std::nullopt;
}

OddEnumeration enumerate_odd(const Taxonomy& taxonomy, const WellFormedSpec& spec) {
  return OddEnumeration(taxonomy, spec);
}

Diagnosis diagnose(const WellFormedSpec& spec, const Lod& lod) {
  Diagnosis d;
  d.verdict = eval_spec(spec, lod);

  std::vector<Atom> positive;
  collect_positive(spec.ast(), true, positive);
  for (const Atom& a : atoms(spec.ast())) {
    Verdict v = eval_atom_values(a, lod.values, spec.taxonomy());
    if (v == Verdict::Unknown) {
      d.unknown_atoms.push_back(a);
    } else if (v == Verdict::False && std::find(positive.begin(), positive.end(), a) != positive.end()) {
      d.falsified_atoms.push_back(a);
    }
  }
  return d;
}

}  // namespace odd
