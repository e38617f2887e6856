#include "odd/value.hpp"

#include <array>
#include <charconv>
#include <system_error>

#include "odd/errors.hpp"

namespace odd {

std::string format_real(double v) {
  // Fixed notation keeps the text inside the spec language's number grammar.
  std::array<char, 512> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::fixed);
  if (ec != std::errc{}) throw Error("cannot format real value");
  std::string s(buf.data(), end);
  if (s.find('.') == std::string::npos) s += ".0";
  return s;
}

std::string to_string(const AttributeValue& v) {
  switch (v.kind()) {
    case AttributeValue::Kind::Unknown: return "?";
    case AttributeValue::Kind::Enum: return v.as_label();
    case AttributeValue::Kind::Bool: return v.as_bool() ? "true" : "false";
    case AttributeValue::Kind::Real: return format_real(v.as_real());
    case AttributeValue::Kind::Int: return std::to_string(v.as_int());
  }
  return {};
}

const char* to_string(AttributeValue::Kind k) noexcept {
  switch (k) {
    case AttributeValue::Kind::Unknown: return "unknown";
    case AttributeValue::Kind::Enum: return "enum";
    case AttributeValue::Kind::Bool: return "bool";
    case AttributeValue::Kind::Real: return "real";
    case AttributeValue::Kind::Int: return "int";
  }
  return "?";
}

}  // namespace odd
