#include "odd/taxonomy.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <set>
#include <unordered_map>

#include <json.hpp>

#include "odd/errors.hpp"

namespace odd {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

namespace {

constexpr std::array<std::string_view, 5> kReservedWords = {"and", "or", "not", "true", "false"};

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

std::string squote(std::string_view s) { return "'" + std::string(s) + "'"; }

}  // namespace

bool is_reserved_word(std::string_view s) noexcept {
  return std::find(kReservedWords.begin(), kReservedWords.end(), s) != kReservedWords.end();
}

bool is_identifier(std::string_view s) noexcept {
  if (s.empty() || !(s[0] >= 'a' && s[0] <= 'z')) return false;
  for (char c : s) {
    if (!((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_')) return false;
  }
  return !is_reserved_word(s);
}

std::optional<std::size_t> EnumType::index_of(std::string_view label) const {
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels.begin());
}

bool is_ordered(const AttributeType& type) noexcept {
  return std::visit(overloaded{
                        [](const EnumType& e) { return e.ordered; },
                        [](const BoolType&) { return false; },
                        [](const RealType&) { return true; },
                        [](const IntType&) { return true; },
                    },
                    type);
}

std::optional<std::string_view> unit_of(const AttributeType& type) noexcept {
  if (auto r = std::get_if<RealType>(&type)) return std::string_view(r->unit);
  if (auto i = std::get_if<IntType>(&type); i && i->unit) return std::string_view(*i->unit);
  return std::nullopt;
}

namespace {

template <typename T, typename Fmt>
std::string describe_bounds(const std::optional<T>& lo, const std::optional<T>& hi, Fmt fmt) {
  if (lo && hi) return " in [" + fmt(*lo) + ", " + fmt(*hi) + "]";
  if (lo) return " >= " + fmt(*lo);
  if (hi) return " <= " + fmt(*hi);
  return {};
}

}  // namespace

std::string describe(const AttributeType& type) {
  return std::visit(
      overloaded{
          [](const EnumType& e) {
            std::string s = "enum{";
            for (std::size_t i = 0; i < e.labels.size(); ++i) {
              if (i) s += ", ";
              s += e.labels[i];
            }
            s += "}";
            if (e.ordered) s += " ordered";
            return s;
          },
          [](const BoolType&) { return std::string("bool"); },
          [](const RealType& r) {
            return "real[" + r.unit + "]" + describe_bounds(r.min, r.max, [](double v) { return format_real(v); });
          },
          [](const IntType& i) {
            std::string s = "int";
            if (i.unit) s += "[" + *i.unit + "]";
            return s + describe_bounds(i.min, i.max, [](std::int64_t v) { return std::to_string(v); });
          },
      },
      type);
}

// ---------------------------------------------------------------------------
// Taxonomy

struct Taxonomy::Data {
  std::string version;
  std::vector<Attribute> attributes;
  std::unordered_map<std::string, std::size_t> index;
};

namespace {

void validate_type(const std::string& name, const AttributeType& type) {
  std::visit(overloaded{
                 [&](const EnumType& e) {
                   if (e.labels.empty()) throw TaxonomyError("attribute " + squote(name) + ": enum has no labels");
                   std::set<std::string_view> seen;
                   for (const auto& l : e.labels) {
                     if (!is_identifier(l))
                       throw TaxonomyError("attribute " + squote(name) + ": label " + squote(l) +
                                           " is not an identifier or is a reserved word");
                     if (!seen.insert(l).second)
                       throw TaxonomyError("attribute " + squote(name) + ": duplicate label " + squote(l));
                   }
                 },
                 [](const BoolType&) {},
                 [&](const RealType& r) {
                   if (!is_identifier(r.unit))
                     throw TaxonomyError("attribute " + squote(name) + ": invalid unit " + squote(r.unit));
                   if ((r.min && !std::isfinite(*r.min)) || (r.max && !std::isfinite(*r.max)))
                     throw TaxonomyError("attribute " + squote(name) + ": bounds must be finite");
                   if (r.min && r.max && *r.min > *r.max)
                     throw TaxonomyError("attribute " + squote(name) + ": inverted bounds");
                 },
                 [&](const IntType& i) {
                   if (i.unit && !is_identifier(*i.unit))
                     throw TaxonomyError("attribute " + squote(name) + ": invalid unit " + squote(*i.unit));
                   if (i.min && i.max && *i.min > *i.max)
                     throw TaxonomyError("attribute " + squote(name) + ": inverted bounds");
                 },
             },
             type);
}

}  // namespace

Taxonomy::Taxonomy() : Taxonomy("", {}) {}

Taxonomy::Taxonomy(std::string version, std::vector<Attribute> attributes) {
  auto d = std::make_shared<Data>();
  d->version = std::move(version);
  for (std::size_t i = 0; i < attributes.size(); ++i) {
    const auto& a = attributes[i];
    if (!is_identifier(a.name))
      throw TaxonomyError("attribute name " + squote(a.name) + " is not an identifier or is a reserved word");
    validate_type(a.name, a.type);
    if (!d->index.emplace(a.name, i).second) throw TaxonomyError("duplicate attribute name " + squote(a.name));
  }
  d->attributes = std::move(attributes);
  data_ = std::move(d);
}

const std::string& Taxonomy::version() const noexcept { return data_->version; }
std::span<const Attribute> Taxonomy::attributes() const noexcept { return data_->attributes; }
std::size_t Taxonomy::size() const noexcept { return data_->attributes.size(); }
const Attribute& Taxonomy::at(std::size_t index) const { return data_->attributes.at(index); }

std::optional<std::size_t> Taxonomy::find(std::string_view name) const {
  auto it = data_->index.find(std::string(name));
  if (it == data_->index.end()) return std::nullopt;
  return it->second;
}

bool operator==(const Taxonomy& a, const Taxonomy& b) {
  return a.data_ == b.data_ ||
         (a.data_->version == b.data_->version && a.data_->attributes == b.data_->attributes);
}

// ---------------------------------------------------------------------------
// Document format

namespace {

SourcePos position_of(std::string_view text, std::size_t byte) {
  // nlohmann reports the 1-based byte index of the offending character.
  SourcePos pos;
  std::size_t end = std::min(byte > 0 ? byte - 1 : 0, text.size());
  for (std::size_t i = 0; i < end; ++i) {
    if (text[i] == '\n') {
      ++pos.line;
      pos.column = 1;
    } else {
      ++pos.column;
    }
  }
  return pos;
}

void reject_unknown_keys(const json& obj, std::initializer_list<std::string_view> allowed, const std::string& where) {
  for (const auto& [key, _] : obj.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
      throw TaxonomyError(where + ": unexpected key " + squote(key));
  }
}

const json& require(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw TaxonomyError(where + ": missing key " + squote(key));
  return *it;
}

std::string require_string(const json& v, const std::string& what) {
  if (!v.is_string()) throw TaxonomyError(what + " must be a string");
  return v.get<std::string>();
}

std::optional<double> real_bound(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) return std::nullopt;
  if (!it->is_number()) throw TaxonomyError(where + ": " + squote(key) + " must be a number");
  return it->get<double>();
}

std::optional<std::int64_t> int_bound(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) return std::nullopt;
  if (it->is_number_integer() && !it->is_number_unsigned()) return it->get<std::int64_t>();
  if (it->is_number_unsigned()) {
    auto u = it->get<std::uint64_t>();
    if (u <= static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
      return static_cast<std::int64_t>(u);
  }
  throw TaxonomyError(where + ": " + squote(key) + " must be a 64-bit integer");
}

Attribute parse_attribute(const json& obj, std::size_t index) {
  std::string where = "attributes[" + std::to_string(index) + "]";
  if (!obj.is_object()) throw TaxonomyError(where + " must be an object");

  Attribute attr;
  attr.name = require_string(require(obj, "name", where), where + ".name");
  where += " (" + squote(attr.name) + ")";
  std::string tag = require_string(require(obj, "type", where), where + ".type");
  if (auto it = obj.find("description"); it != obj.end()) {
    attr.description = require_string(*it, where + ".description");
  }

  if (tag == "enum") {
    reject_unknown_keys(obj, {"name", "type", "description", "labels", "ordered"}, where);
    EnumType e;
    const json& labels = require(obj, "labels", where);
    if (!labels.is_array()) throw TaxonomyError(where + ": 'labels' must be an array");
    for (const auto& l : labels) e.labels.push_back(require_string(l, where + " label"));
    if (auto it = obj.find("ordered"); it != obj.end()) {
      if (!it->is_boolean()) throw TaxonomyError(where + ": 'ordered' must be a boolean");
      e.ordered = it->get<bool>();
    }
    attr.type = std::move(e);
  } else if (tag == "bool") {
    reject_unknown_keys(obj, {"name", "type", "description"}, where);
    attr.type = BoolType{};
  } else if (tag == "real") {
    reject_unknown_keys(obj, {"name", "type", "description", "unit", "min", "max"}, where);
    RealType r;
    r.unit = require_string(require(obj, "unit", where), where + ".unit");
    r.min = real_bound(obj, "min", where);
    r.max = real_bound(obj, "max", where);
    attr.type = std::move(r);
  } else if (tag == "int") {
    reject_unknown_keys(obj, {"name", "type", "description", "unit", "min", "max"}, where);
    IntType i;
    if (auto it = obj.find("unit"); it != obj.end()) i.unit = require_string(*it, where + ".unit");
    i.min = int_bound(obj, "min", where);
    i.max = int_bound(obj, "max", where);
    attr.type = std::move(i);
  } else {
    throw TaxonomyError(where + ": unknown type tag " + squote(tag));
  }
  return attr;
}

}  // namespace

Taxonomy parse_taxonomy(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    std::string what = e.what();
    // Drop nlohmann's "[json.exception.parse_error.101] parse error at line 1, column 2: " prefix.
    if (auto p = what.rfind(": "); p != std::string::npos) what = what.substr(p + 2);
    throw TaxonomySyntaxError(position_of(text, e.byte), what);
  }

  if (!doc.is_object()) throw TaxonomyError("taxonomy document must be an object");
  reject_unknown_keys(doc, {"version", "attributes"}, "taxonomy");
  std::string version = require_string(require(doc, "version", "taxonomy"), "'version'");
  const json& list = require(doc, "attributes", "taxonomy");
  if (!list.is_array()) throw TaxonomyError("'attributes' must be an array");

  std::vector<Attribute> attrs;
  attrs.reserve(list.size());
  for (std::size_t i = 0; i < list.size(); ++i) attrs.push_back(parse_attribute(list[i], i));
  return Taxonomy(std::move(version), std::move(attrs));
}

std::string serialize_taxonomy(const Taxonomy& taxonomy) {
  ordered_json doc;
  doc["version"] = taxonomy.version();
  doc["attributes"] = ordered_json::array();
  for (const auto& a : taxonomy.attributes()) {
    ordered_json o;
    o["name"] = a.name;
    std::visit(overloaded{
                   [&](const EnumType& e) {
                     o["type"] = "enum";
                     o["labels"] = e.labels;
                     if (e.ordered) o["ordered"] = true;
                   },
                   [&](const BoolType&) { o["type"] = "bool"; },
                   [&](const RealType& r) {
                     o["type"] = "real";
                     o["unit"] = r.unit;
                     if (r.min) o["min"] = *r.min;
                     if (r.max) o["max"] = *r.max;
                   },
                   [&](const IntType& i) {
                     o["type"] = "int";
                     if (i.unit) o["unit"] = *i.unit;
                     if (i.min) o["min"] = *i.min;
                     if (i.max) o["max"] = *i.max;
                   },
               },
               a.type);
    if (!a.description.empty()) o["description"] = a.description;
    doc["attributes"].push_back(std::move(o));
  }
  return doc.dump(2) + "\n";
}

bool value_in_domain(const Attribute& attr, const AttributeValue& value) noexcept {
  using K = AttributeValue::Kind;
  return std::visit(overloaded{
                        [&](const EnumType& e) {
                          return value.kind() == K::Enum && e.index_of(value.as_label()).has_value();
                        },
                        [&](const BoolType&) { return value.kind() == K::Bool; },
                        [&](const RealType& r) {
                          if (value.kind() != K::Real) return false;
                          double v = value.as_real();
                          return std::isfinite(v) && (!r.min || v >= *r.min) && (!r.max || v <= *r.max);
                        },
                        [&](const IntType& i) {
                          if (value.kind() != K::Int) return false;
                          auto v = value.as_int();
                          return (!i.min || v >= *i.min) && (!i.max || v <= *i.max);
                        },
                    },
                    attr.type);
}

Cardinality domain_cardinality(const Taxonomy& taxonomy) {
  Cardinality c;
  for (const auto& a : taxonomy.attributes()) {
    bool finite = std::visit(overloaded{
                                 [&](const EnumType& e) {
                                   c.count *= e.labels.size();
                                   return true;
                                 },
                                 [&](const BoolType&) {
                                   c.count *= 2;
                                   return true;
                                 },
                                 [](const RealType&) { return false; },
                                 [&](const IntType& i) {
                                   if (!i.min || !i.max) return false;
                                   c.count *= Cardinality::Count(*i.max) - Cardinality::Count(*i.min) + 1;
                                   return true;
                                 },
                             },
                             a.type);
    if (!finite) return Cardinality::infinite();
  }
  return c;
}

std::string to_string(const Cardinality& c) { return c.finite ? c.count.str() : "infinite"; }

}  // namespace odd
