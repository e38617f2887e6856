#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <iterator>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "odd/taxonomy.hpp"
#include "odd/value.hpp"

namespace odd {

/// Local operational domain: the interpreted attribute tuple at time `t`
/// (seconds, >= 0) and location (`x`, `y`) in an uninterpreted fixed frame.
struct Lod {
  std::string taxonomy_version;
  double t = 0.0;
  double x = 0.0;
  double y = 0.0;
  ValueTuple values;

  friend bool operator==(const Lod&, const Lod&) = default;
};

/// Checks every Lod invariant against `taxonomy`; returns a description of
/// the first violation, or nothing when the Lod is valid.
std::optional<std::string> validate_lod(const Lod& lod, const Taxonomy& taxonomy);

/// Builds a positional tuple from named values. Attributes absent from
/// `assignments` are Unknown.
Lod make_lod(const Taxonomy& taxonomy,
             const std::map<std::string, AttributeValue, std::less<>>& assignments,
             double t, double x = 0.0, double y = 0.0);

/// Lazily walks every tuple of a finite operational domain, attribute order
/// major, value declaration order minor. Booleans enumerate `true` first;
/// bounded integers ascend.
class OdEnumeration {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = ValueTuple;
    using difference_type = std::ptrdiff_t;
    using pointer = const ValueTuple*;
    using reference = const ValueTuple&;

    iterator() = default;
    reference operator*() const { return owner_->current_; }
    pointer operator->() const { return &owner_->current_; }
    iterator& operator++() {
      if (!owner_->advance()) owner_ = nullptr;
      return *this;
    }
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& a, const iterator& b) { return a.owner_ == b.owner_; }

   private:
    friend class OdEnumeration;
    explicit iterator(OdEnumeration* owner) : owner_(owner) {}
    OdEnumeration* owner_ = nullptr;
  };

  /// Throws InfiniteDomainError unless every attribute is an enum, a bool,
  /// or a bounded integer.
  explicit OdEnumeration(const Taxonomy& taxonomy);

  /// Next tuple, or nothing once the domain is exhausted.
  std::optional<ValueTuple> next();

  /// Single-pass: begin() starts from the enumerator's current position.
  iterator begin();
  iterator end() { return iterator{}; }

 private:
  struct Axis {
    enum class Kind { Enum, Bool, Int } kind;
    const std::vector<std::string>* labels = nullptr;
    std::int64_t lower = 0;
    std::uint64_t last_digit = 0;  // size - 1
  };

  bool advance();
  AttributeValue value_at(const Axis& axis, std::uint64_t digit) const;

  Taxonomy taxonomy_;
  std::vector<Axis> axes_;
  std::vector<std::uint64_t> digits_;
  ValueTuple current_;
  bool started_ = false;
  bool exhausted_ = false;
};

inline OdEnumeration enumerate_od(const Taxonomy& taxonomy) { return OdEnumeration(taxonomy); }

/// Time-ordered sequence of samples over one taxonomy.
struct Trace {
  std::string taxonomy_version;
  std::vector<Lod> samples;  // strictly increasing t
};

/// Parses one trace record (a single structured-object line).
/// Throws TraceError with `line` on any problem.
Lod parse_lod_record(std::string_view record, const Taxonomy& taxonomy, std::size_t line = 1);

/// Canonical one-line record for `lod`; Unknown values are written as null.
std::string serialize_lod_record(const Lod& lod, const Taxonomy& taxonomy);

/// Incremental reader over a line-delimited trace stream. Blank lines are
/// skipped. Enforces strictly increasing timestamps.
class TraceReader {
 public:
  TraceReader(std::istream& in, Taxonomy taxonomy);

  /// Next sample, or nothing at end of stream. Throws TraceError.
  std::optional<Lod> next();

  std::size_t line() const noexcept { return line_; }

 private:
  std::istream* in_;
  Taxonomy taxonomy_;
  std::size_t line_ = 0;
  std::optional<double> last_t_;
};

Trace parse_trace(std::istream& in, const Taxonomy& taxonomy);
Trace parse_trace(std::string_view text, const Taxonomy& taxonomy);

std::string serialize_trace(const Trace& trace, const Taxonomy& taxonomy);

/// Current operational domain at `now`: the latest sample with t <= now.
/// Throws TimeRangeError if the trace is empty or `now` precedes it.
const Lod& cod_of(const Trace& trace, double now);

}  // namespace odd
