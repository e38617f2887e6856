#include <cmath>
#include <istream>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "odd/domain.hpp"
#include "odd/errors.hpp"

namespace odd {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

namespace {

double number_field(const json& obj, const char* key, std::size_t line) {
  auto it = obj.find(key);
  if (it == obj.end()) throw TraceError(line, std::string("missing '") + key + "'");
  if (!it->is_number()) throw TraceError(line, std::string("'") + key + "' must be a number");
  double v = it->get<double>();
  if (!std::isfinite(v)) throw TraceError(line, std::string("'") + key + "' must be finite");
  return v;
}

AttributeValue convert(const Attribute& attr, const json& v, std::size_t line) {
  if (v.is_null()) return AttributeValue::unknown();

  AttributeValue out;
  if (std::holds_alternative<EnumType>(attr.type)) {
    if (v.is_string()) out = AttributeValue::label(v.get<std::string>());
  } else if (std::holds_alternative<BoolType>(attr.type)) {
    if (v.is_boolean()) out = AttributeValue::boolean(v.get<bool>());
  } else if (std::holds_alternative<RealType>(attr.type)) {
    if (v.is_number()) out = AttributeValue::real(v.get<double>());
  } else if (v.is_number_unsigned()) {
    auto u = v.get<std::uint64_t>();
    if (u <= static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
      out = AttributeValue::integer(static_cast<std::int64_t>(u));
  } else if (v.is_number_integer()) {
    out = AttributeValue::integer(v.get<std::int64_t>());
  }

  if (out.is_unknown() || !value_in_domain(attr, out))
    throw TraceError(line, "value " + v.dump() + " is outside the domain of '" + attr.name + "' (" +
                               describe(attr.type) + ")");
  return out;
}

ordered_json to_json(const AttributeValue& v) {
  switch (v.kind()) {
    case AttributeValue::Kind::Unknown: return nullptr;
    case AttributeValue::Kind::Enum: return v.as_label();
    case AttributeValue::Kind::Bool: return v.as_bool();
    case AttributeValue::Kind::Real: return v.as_real();
    case AttributeValue::Kind::Int: return v.as_int();
  }
  return nullptr;
}

bool is_blank(std::string_view s) {
  return s.find_first_not_of(" \t\r\n\f\v") == std::string_view::npos;
}

}  // namespace

Lod parse_lod_record(std::string_view record, const Taxonomy& taxonomy, std::size_t line) {
  json doc;
  try {
    doc = json::parse(record.begin(), record.end());
  } catch (const json::parse_error& e) {
    throw TraceError(line, "malformed record at byte " + std::to_string(e.byte));
  }
  if (!doc.is_object()) throw TraceError(line, "record must be an object");
  for (const auto& [key, _] : doc.items()) {
    if (key != "t" && key != "x" && key != "y" && key != "values")
      throw TraceError(line, "unexpected key '" + key + "'");
  }

  Lod lod;
  lod.taxonomy_version = taxonomy.version();
  lod.t = number_field(doc, "t", line);
  if (lod.t < 0.0) throw TraceError(line, "'t' must be non-negative");
  lod.x = number_field(doc, "x", line);
  lod.y = number_field(doc, "y", line);
  lod.values.assign(taxonomy.size(), AttributeValue::unknown());

  auto values = doc.find("values");
  if (values == doc.end()) throw TraceError(line, "missing 'values'");
  if (!values->is_object()) throw TraceError(line, "'values' must be an object");
  for (const auto& [key, v] : values->items()) {
    auto index = taxonomy.find(key);
    if (!index) throw TraceError(line, "unknown attribute '" + key + "'");
    lod.values[*index] = convert(taxonomy.at(*index), v, line);
  }
  return lod;
}

std::string serialize_lod_record(const Lod& lod, const Taxonomy& taxonomy) {
  ordered_json doc;
  doc["t"] = lod.t;
  doc["x"] = lod.x;
  doc["y"] = lod.y;
  ordered_json values = ordered_json::object();
  for (std::size_t i = 0; i < taxonomy.size() && i < lod.values.size(); ++i)
    values[taxonomy.at(i).name] = to_json(lod.values[i]);
  doc["values"] = std::move(values);
  return doc.dump();
}

TraceReader::TraceReader(std::istream& in, Taxonomy taxonomy) : in_(&in), taxonomy_(std::move(taxonomy)) {}

std::optional<Lod> TraceReader::next() {
  std::string text;
  while (std::getline(*in_, text)) {
    ++line_;
    if (is_blank(text)) continue;
    Lod lod = parse_lod_record(text, taxonomy_, line_);
    if (last_t_ && !(lod.t > *last_t_))
      throw TraceError(line_, "timestamp " + format_real(lod.t) + " does not increase (previous " +
                                  format_real(*last_t_) + ")");
    last_t_ = lod.t;
    return lod;
  }
  if (in_->bad()) throw TraceError(line_, "read error");
  return std::nullopt;
}

Trace parse_trace(std::istream& in, const Taxonomy& taxonomy) {
  Trace trace{taxonomy.version(), {}};
  TraceReader reader(in, taxonomy);
  while (auto lod = reader.next()) trace.samples.push_back(std::move(*lod));
  return trace;
}

Trace parse_trace(std::string_view text, const Taxonomy& taxonomy) {
  std::istringstream in{std::string(text)};
  return parse_trace(in, taxonomy);
}

std::string serialize_trace(const Trace& trace, const Taxonomy& taxonomy) {
  std::string out;
  for (const auto& s : trace.samples) {
    out += serialize_lod_record(s, taxonomy);
    out += '\n';
  }
  return out;
}

}  // namespace odd
