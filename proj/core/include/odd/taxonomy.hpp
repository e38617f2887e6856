#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "odd/value.hpp"

namespace odd {

struct EnumType {
  std::vector<std::string> labels;
  /// Enables `<`, `>`, `<=`, `>=` using label-list order.
  bool ordered = false;

  std::optional<std::size_t> index_of(std::string_view label) const;
  friend bool operator==(const EnumType&, const EnumType&) = default;
};

struct BoolType {
  friend bool operator==(BoolType, BoolType) = default;
};

struct RealType {
  std::string unit;
  std::optional<double> min;  // inclusive
  std::optional<double> max;  // inclusive
  friend bool operator==(const RealType&, const RealType&) = default;
};

struct IntType {
  std::optional<std::string> unit;
  std::optional<std::int64_t> min;  // inclusive
  std::optional<std::int64_t> max;  // inclusive
  friend bool operator==(const IntType&, const IntType&) = default;
};

using AttributeType = std::variant<EnumType, BoolType, RealType, IntType>;

/// True when the type admits `<`, `>`, `<=`, `>=`.
bool is_ordered(const AttributeType& type) noexcept;

/// Declared unit tag, if the type carries one.
std::optional<std::string_view> unit_of(const AttributeType& type) noexcept;

/// Short human-readable form, e.g. `enum{motorway, regional, rural}` or
/// `real[kmh] >= 0.0`.
std::string describe(const AttributeType& type);

struct Attribute {
  std::string name;
  AttributeType type;
  std::string description;

  friend bool operator==(const Attribute&, const Attribute&) = default;
};

/// `[a-z][a-z0-9_]*`, excluding the words reserved by the spec language.
bool is_identifier(std::string_view s) noexcept;
bool is_reserved_word(std::string_view s) noexcept;

/// The attribute set of an operational domain together with their data
/// types. Attribute order fixes tuple positions in every LOD.
///
/// Immutable once built; copies share storage.
class Taxonomy {
 public:
  /// Validates every invariant and throws TaxonomyError on violation.
  Taxonomy(std::string version, std::vector<Attribute> attributes);
  Taxonomy();

  const std::string& version() const noexcept;
  std::span<const Attribute> attributes() const noexcept;
  std::size_t size() const noexcept;
  const Attribute& at(std::size_t index) const;

  std::optional<std::size_t> find(std::string_view name) const;

  friend bool operator==(const Taxonomy& a, const Taxonomy& b);

 private:
  struct Data;
  std::shared_ptr<const Data> data_;
};

/// Reads the structured-object taxonomy document.
Taxonomy parse_taxonomy(std::string_view text);

/// Canonical document form; `parse_taxonomy(serialize_taxonomy(t)) == t`.
std::string serialize_taxonomy(const Taxonomy& taxonomy);

/// True iff `value` has the attribute's kind and lies in its declared
/// domain (declared label, inclusive bounds, finite reals). Unknown is never
/// in any domain.
bool value_in_domain(const Attribute& attr, const AttributeValue& value) noexcept;

/// Number of elements of the product of all data types.
struct Cardinality {
  using Count = boost::multiprecision::cpp_int;

  bool finite = true;
  Count count = 1;  // meaningful only when finite

  static Cardinality infinite() { return Cardinality{false, 0}; }
  friend bool operator==(const Cardinality&, const Cardinality&) = default;
};

Cardinality domain_cardinality(const Taxonomy& taxonomy);

std::string to_string(const Cardinality& c);

}  // namespace odd
