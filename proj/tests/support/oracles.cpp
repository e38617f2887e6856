#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace odd::testing {

Taxonomy motorway_taxonomy() {
  return Taxonomy("1", {
                           {"road_type", EnumType{{"motorway", "regional", "rural"}, false}, ""},
                           {"pedestrian_present", BoolType{}, ""},
                           {"operational_speed", RealType{"kmh", 0.0, std::nullopt}, ""},
                       });
}

Taxonomy motorway_finite_taxonomy() {
  return Taxonomy("1", {
                           {"road_type", EnumType{{"motorway", "regional", "rural"}, false}, ""},
                           {"pedestrian_present", BoolType{}, ""},
                       });
}

std::vector<AttributeValue> domain_values(const Attribute& attr) {
  std::vector<AttributeValue> out;
  if (const auto* e = std::get_if<EnumType>(&attr.type)) {
    for (const auto& l : e->labels) out.push_back(AttributeValue::label(l));
  } else if (std::holds_alternative<BoolType>(attr.type)) {
    out = {AttributeValue::boolean(true), AttributeValue::boolean(false)};
  } else if (const auto* i = std::get_if<IntType>(&attr.type); i && i->min && i->max) {
    for (std::int64_t v = *i->min; v <= *i->max; ++v) out.push_back(AttributeValue::integer(v));
  } else {
    throw std::invalid_argument("attribute '" + attr.name + "' is not finite");
  }
  return out;
}

namespace {

void product(const std::vector<std::vector<AttributeValue>>& axes, std::size_t depth, ValueTuple& prefix,
             std::vector<ValueTuple>& out) {
  if (depth == axes.size()) {
    out.push_back(prefix);
    return;
  }
  for (const auto& v : axes[depth]) {
    prefix.push_back(v);
    product(axes, depth + 1, prefix, out);
    prefix.pop_back();
  }
}

template <typename T>
bool compare(Predicate p, T a, T b) {
  switch (p) {
    case Predicate::Eq: return a == b;
    case Predicate::Lt: return a < b;
    case Predicate::Gt: return a > b;
    case Predicate::Le: return !(b < a);
    case Predicate::Ge: return !(a < b);
  }
  throw std::logic_error("bad predicate");
}

}  // namespace

std::vector<ValueTuple> brute_force_od(const Taxonomy& taxonomy) {
  std::vector<std::vector<AttributeValue>> axes;
  for (const auto& a : taxonomy.attributes()) axes.push_back(domain_values(a));
  std::vector<ValueTuple> out;
  ValueTuple prefix;
  product(axes, 0, prefix, out);
  return out;
}

bool oracle_atom(const Atom& atom, const ValueTuple& values, const Taxonomy& taxonomy) {
  std::size_t index = taxonomy.size();
  for (std::size_t i = 0; i < taxonomy.size(); ++i) {
    if (taxonomy.at(i).name == atom.attribute) index = i;
  }
  if (index == taxonomy.size()) throw std::invalid_argument("oracle: unknown attribute");
  const Attribute& attr = taxonomy.at(index);
  const AttributeValue& v = values.at(index);

  if (const auto* e = std::get_if<EnumType>(&attr.type)) {
    auto pos = [&](const std::string& l) { return std::find(e->labels.begin(), e->labels.end(), l) - e->labels.begin(); };
    return compare(atom.predicate, pos(v.as_label()), pos(atom.literal.as_label()));
  }
  if (std::holds_alternative<BoolType>(attr.type)) return v.as_bool() == atom.literal.as_bool();
  if (std::holds_alternative<RealType>(attr.type)) {
    double lit = atom.literal.kind() == AttributeValue::Kind::Int ? static_cast<double>(atom.literal.as_int())
                                                                   : atom.literal.as_real();
    return compare(atom.predicate, v.as_real(), lit);
  }
  return compare(atom.predicate, v.as_int(), atom.literal.as_int());
}

bool oracle_eval(const SpecAst& ast, const ValueTuple& values, const Taxonomy& taxonomy) {
  switch (ast.kind()) {
    case SpecAst::Kind::Atom: return oracle_atom(ast.atom(), values, taxonomy);
    case SpecAst::Kind::Not: return !oracle_eval(ast.operand(), values, taxonomy);
    case SpecAst::Kind::And: return oracle_eval(ast.lhs(), values, taxonomy) && oracle_eval(ast.rhs(), values, taxonomy);
  }
  throw std::logic_error("bad node");
}

Taxonomy taxonomy_of(const std::vector<Shape>& shapes) {
  std::vector<Attribute> attrs;
  for (std::size_t i = 0; i < shapes.size(); ++i) {
    Attribute a;
    a.name = "a" + std::to_string(i);
    switch (shapes[i]) {
      case Shape::Bool: a.type = BoolType{}; break;
      case Shape::Enum3: a.type = EnumType{{"red", "green", "blue"}, false}; break;
      case Shape::OrderedEnum5: a.type = EnumType{{"l0", "l1", "l2", "l3", "l4"}, true}; break;
      case Shape::IntRange5: a.type = IntType{"m", -2, 2}; break;
    }
    attrs.push_back(std::move(a));
  }
  return Taxonomy("gen", std::move(attrs));
}

std::vector<Taxonomy> finite_family() {
  std::vector<Taxonomy> out;
  std::vector<Shape> shapes;
  auto grow = [&](auto&& self, std::size_t n) -> void {
    if (shapes.size() == n) {
      out.push_back(taxonomy_of(shapes));
      return;
    }
    for (Shape s : kShapes) {
      shapes.push_back(s);
      self(self, n);
      shapes.pop_back();
    }
  };
  for (std::size_t n = 1; n <= 4; ++n) grow(grow, n);
  return out;
}

namespace {

std::size_t pick(Rng& rng, std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }
bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

std::string random_identifier(Rng& rng) {
  static const char* pool[] = {"road_type", "speed", "a", "z9", "lane_count", "x_1", "weather", "t"};
  if (coin(rng, 0.7)) return pool[pick(rng, std::size(pool))];
  std::string s(1, static_cast<char>('a' + pick(rng, 26)));
  const std::string tail = "abcdefghijklmnopqrstuvwxyz0123456789_";
  for (std::size_t n = pick(rng, 8); n > 0; --n) s += tail[pick(rng, tail.size())];
  return is_reserved_word(s) ? s + "_" : s;
}

double random_real(Rng& rng) {
  switch (pick(rng, 6)) {
    case 0: return std::uniform_real_distribution<double>(-1000.0, 1000.0)(rng);
    case 1: return static_cast<double>(std::uniform_int_distribution<int>(-500, 500)(rng));
    case 2: return std::uniform_real_distribution<double>(0.0, 1.0)(rng) * 1e-9;
    case 3: return std::ldexp(std::uniform_real_distribution<double>(-1.0, 1.0)(rng), 60);
    case 4: return std::ldexp(1.0, -1070);  // subnormal
    default: return std::uniform_int_distribution<int>(0, 9999)(rng) / 100.0;
  }
}

}  // namespace

Taxonomy random_finite_taxonomy(Rng& rng) {
  std::vector<Shape> shapes(1 + pick(rng, 4));
  for (auto& s : shapes) s = kShapes[pick(rng, std::size(kShapes))];
  return taxonomy_of(shapes);
}

AttributeValue random_value(Rng& rng, const Attribute& attr) {
  if (const auto* e = std::get_if<EnumType>(&attr.type)) return AttributeValue::label(e->labels[pick(rng, e->labels.size())]);
  if (std::holds_alternative<BoolType>(attr.type)) return AttributeValue::boolean(coin(rng));
  if (const auto* r = std::get_if<RealType>(&attr.type)) {
    double lo = r->min.value_or(-500.0);
    double hi = r->max.value_or(lo + 1000.0);
    if (coin(rng, 0.3)) return AttributeValue::real(std::round(std::uniform_real_distribution<double>(lo, hi)(rng)));
    return AttributeValue::real(std::uniform_real_distribution<double>(lo, hi)(rng));
  }
  const auto& i = std::get<IntType>(attr.type);
  std::int64_t lo = i.min.value_or(-1000);
  std::int64_t hi = i.max.value_or(lo + 2000);
  return AttributeValue::integer(std::uniform_int_distribution<std::int64_t>(lo, hi)(rng));
}

Atom random_atom(Rng& rng, const Taxonomy& taxonomy) {
  const Attribute& attr = taxonomy.at(pick(rng, taxonomy.size()));
  Atom a;
  a.attribute = attr.name;
  a.predicate = is_ordered(attr.type) ? static_cast<Predicate>(pick(rng, 5)) : Predicate::Eq;
  a.literal = random_value(rng, attr);
  if (std::holds_alternative<RealType>(attr.type) && coin(rng, 0.3)) {
    a.literal = AttributeValue::integer(static_cast<std::int64_t>(std::floor(a.literal.as_real())));
    if (!value_in_domain(attr, AttributeValue::real(static_cast<double>(a.literal.as_int()))))
      a.literal = random_value(rng, attr);
  }
  if (auto unit = unit_of(attr.type); unit && coin(rng)) a.unit = std::string(*unit);
  return a;
}

SpecAst random_spec(Rng& rng, const Taxonomy& taxonomy, std::size_t max_depth) {
  if (max_depth <= 1 || coin(rng, 0.25)) return SpecAst::atom(random_atom(rng, taxonomy));
  if (coin(rng, 0.35)) return SpecAst::negate(random_spec(rng, taxonomy, max_depth - 1));
  return SpecAst::conjoin(random_spec(rng, taxonomy, max_depth - 1), random_spec(rng, taxonomy, max_depth - 1));
}

SpecAst random_syntax_tree(Rng& rng, std::size_t max_depth) {
  if (max_depth <= 1 || coin(rng, 0.3)) {
    Atom a;
    a.attribute = random_identifier(rng);
    a.predicate = static_cast<Predicate>(pick(rng, 5));
    switch (pick(rng, 4)) {
      case 0: a.literal = AttributeValue::label(random_identifier(rng)); break;
      case 1: a.literal = AttributeValue::boolean(coin(rng)); break;
      case 2:
        a.literal = AttributeValue::integer(coin(rng, 0.1) ? std::numeric_limits<std::int64_t>::min()
                                                           : std::uniform_int_distribution<std::int64_t>(-100000, 100000)(rng));
        break;
      default: a.literal = AttributeValue::real(random_real(rng)); break;
    }
    bool numeric = a.literal.kind() == AttributeValue::Kind::Int || a.literal.kind() == AttributeValue::Kind::Real;
    if (numeric && coin(rng)) a.unit = random_identifier(rng);
    return SpecAst::atom(std::move(a));
  }
  if (coin(rng, 0.35)) return SpecAst::negate(random_syntax_tree(rng, max_depth - 1));
  return SpecAst::conjoin(random_syntax_tree(rng, max_depth - 1), random_syntax_tree(rng, max_depth - 1));
}

ValueTuple random_tuple(Rng& rng, const Taxonomy& taxonomy, double unknown_p) {
  ValueTuple out;
  for (const auto& a : taxonomy.attributes()) {
    out.push_back(coin(rng, unknown_p) ? AttributeValue::unknown() : random_value(rng, a));
  }
  return out;
}

Lod lod_of(const Taxonomy& taxonomy, ValueTuple values, double t, double x, double y) {
  return Lod{taxonomy.version(), t, x, y, std::move(values)};
}

}  // namespace odd::testing
