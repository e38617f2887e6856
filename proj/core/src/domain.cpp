#include "odd/domain.hpp"

#include <algorithm>
#include <cmath>

#include "odd/errors.hpp"

namespace odd {

std::optional<std::string> validate_lod(const Lod& lod, const Taxonomy& taxonomy) {
  if (lod.taxonomy_version != taxonomy.version())
    return "taxonomy version '" + lod.taxonomy_version + "' does not match '" + taxonomy.version() + "'";
  if (lod.values.size() != taxonomy.size())
    return "expected " + std::to_string(taxonomy.size()) + " values, got " + std::to_string(lod.values.size());
  if (!(lod.t >= 0.0) || !std::isfinite(lod.t)) return "time must be a finite non-negative number";
  if (!std::isfinite(lod.x) || !std::isfinite(lod.y)) return "coordinates must be finite";
  for (std::size_t i = 0; i < lod.values.size(); ++i) {
    const auto& v = lod.values[i];
    if (!v.is_unknown() && !value_in_domain(taxonomy.at(i), v))
      return "value " + to_string(v) + " is outside the domain of '" + taxonomy.at(i).name + "'";
  }
  return std::nullopt;
}

Lod make_lod(const Taxonomy& taxonomy, const std::map<std::string, AttributeValue, std::less<>>& assignments,
             double t, double x, double y) {
  if (!(t >= 0.0) || !std::isfinite(t)) throw LodError("time must be a finite non-negative number");
  if (!std::isfinite(x) || !std::isfinite(y)) throw LodError("coordinates must be finite");

  Lod lod{taxonomy.version(), t, x, y, ValueTuple(taxonomy.size())};
  for (const auto& [name, value] : assignments) {
    auto index = taxonomy.find(name);
    if (!index) throw LodError("unknown attribute '" + name + "'");
    if (!value.is_unknown() && !value_in_domain(taxonomy.at(*index), value))
      throw LodError("value " + to_string(value) + " is outside the domain of '" + name + "' (" +
                     describe(taxonomy.at(*index).type) + ")");
    lod.values[*index] = value;
  }
  return lod;
}

// ---------------------------------------------------------------------------
// OdEnumeration

OdEnumeration::OdEnumeration(const Taxonomy& taxonomy) : taxonomy_(taxonomy) {
  for (const auto& attr : taxonomy_.attributes()) {
    Axis axis{};
    if (auto e = std::get_if<EnumType>(&attr.type)) {
      axis.kind = Axis::Kind::Enum;
      axis.labels = &e->labels;
      axis.last_digit = e->labels.size() - 1;
    } else if (std::holds_alternative<BoolType>(attr.type)) {
      axis.kind = Axis::Kind::Bool;
      axis.last_digit = 1;
    } else if (auto i = std::get_if<IntType>(&attr.type); i && i->min && i->max) {
      axis.kind = Axis::Kind::Int;
      axis.lower = *i->min;
      // Two's-complement difference fits even for the full int64 range.
      axis.last_digit = static_cast<std::uint64_t>(*i->max) - static_cast<std::uint64_t>(*i->min);
    } else {
      throw InfiniteDomainError("attribute '" + attr.name + "' (" + describe(attr.type) +
                                ") has an infinite domain; the operational domain cannot be enumerated");
    }
    axes_.push_back(axis);
  }
  digits_.assign(axes_.size(), 0);
}

AttributeValue OdEnumeration::value_at(const Axis& axis, std::uint64_t digit) const {
  switch (axis.kind) {
    case Axis::Kind::Enum: return AttributeValue::label((*axis.labels)[digit]);
    case Axis::Kind::Bool: return AttributeValue::boolean(digit == 0);
    case Axis::Kind::Int:
      return AttributeValue::integer(static_cast<std::int64_t>(static_cast<std::uint64_t>(axis.lower) + digit));
  }
  return {};
}

bool OdEnumeration::advance() {
  if (exhausted_) return false;
  if (!started_) {
    started_ = true;
    current_.clear();
    for (std::size_t i = 0; i < axes_.size(); ++i) current_.push_back(value_at(axes_[i], 0));
    return true;
  }
  // Odometer: the last attribute varies fastest.
  for (std::size_t i = axes_.size(); i-- > 0;) {
    if (digits_[i] < axes_[i].last_digit) {
      ++digits_[i];
      current_[i] = value_at(axes_[i], digits_[i]);
      return true;
    }
    digits_[i] = 0;
    current_[i] = value_at(axes_[i], 0);
  }
  exhausted_ = true;
  return false;
}

std::optional<ValueTuple> OdEnumeration::next() {
  if (!advance()) return std::nullopt;
  return current_;
}

OdEnumeration::iterator OdEnumeration::begin() {
  return advance() ? iterator(this) : iterator();
}

// ---------------------------------------------------------------------------

const Lod& cod_of(const Trace& trace, double now) {
  if (trace.samples.empty()) throw TimeRangeError("trace has no samples");
  if (std::isnan(now) || now < trace.samples.front().t)
    throw TimeRangeError("time " + format_real(now) + " precedes the first sample");
  auto it = std::upper_bound(trace.samples.begin(), trace.samples.end(), now,
                             [](double value, const Lod& s) { return value < s.t; });
  return *std::prev(it);
}

}  // namespace odd
