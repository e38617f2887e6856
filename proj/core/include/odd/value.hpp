#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace odd {

struct UnknownValue {
  friend bool operator==(UnknownValue, UnknownValue) = default;
};

struct EnumLabel {
  std::string label;
  friend bool operator==(const EnumLabel&, const EnumLabel&) = default;
};

/// The value an interpretation assigns to one attribute, or `Unknown` when
/// the attribute was not measured.
///
/// Equality is structural: kinds must agree, and `Unknown` only equals
/// `Unknown`. Semantic comparison lives in the evaluator.
class AttributeValue {
 public:
  enum class Kind { Unknown, Enum, Bool, Real, Int };

  AttributeValue() = default;

  static AttributeValue unknown() { return AttributeValue{}; }
  static AttributeValue label(std::string l) { return AttributeValue{EnumLabel{std::move(l)}}; }
  static AttributeValue boolean(bool b) { return AttributeValue{b}; }
  static AttributeValue real(double v) { return AttributeValue{v}; }
  static AttributeValue integer(std::int64_t i) { return AttributeValue{i}; }

  Kind kind() const noexcept { return static_cast<Kind>(data_.index()); }
  bool is_unknown() const noexcept { return kind() == Kind::Unknown; }

  const std::string& as_label() const { return std::get<EnumLabel>(data_).label; }
  bool as_bool() const { return std::get<bool>(data_); }
  double as_real() const { return std::get<double>(data_); }
  std::int64_t as_int() const { return std::get<std::int64_t>(data_); }

  friend bool operator==(const AttributeValue&, const AttributeValue&) = default;

 private:
  using Storage = std::variant<UnknownValue, EnumLabel, bool, double, std::int64_t>;
  template <typename T>
  explicit AttributeValue(T v) : data_(std::move(v)) {}

  Storage data_;
};

/// One element of an operational domain: values in taxonomy attribute order.
using ValueTuple = std::vector<AttributeValue>;

/// Shortest decimal text that reads back to the same double, always in
/// fixed notation and always with a fractional part ("60.0", "-0.25").
std::string format_real(double v);

/// Text used for a value in tuple listings: labels verbatim, `true`/`false`,
/// decimal numbers, `?` for Unknown.
std::string to_string(const AttributeValue& v);

const char* to_string(AttributeValue::Kind k) noexcept;

}  // namespace odd
