#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "odd/domain.hpp"
#include "odd/evaluator.hpp"
#include "odd/spec.hpp"
#include "odd/taxonomy.hpp"

namespace odd {

struct MonitorEvent {
  enum class Kind { Entry, Exit, UnknownStart, UnknownEnd };

  Kind kind = Kind::Entry;
  double t = 0.0;
  std::size_t sample_index = 0;
  Diagnosis diagnosis;

  friend bool operator==(const MonitorEvent&, const MonitorEvent&) = default;
};

/// `entry`, `exit`, `unknown_start` or `unknown_end`.
const char* to_string(MonitorEvent::Kind k) noexcept;

struct SampleCounters {
  std::uint64_t total = 0;
  std::uint64_t in = 0;
  std::uint64_t out = 0;
  std::uint64_t unknown = 0;

  friend bool operator==(const SampleCounters&, const SampleCounters&) = default;
};

/// Seconds spent under each verdict, attributing [t_prev, t_next) to the
/// verdict of the earlier sample.
struct Dwell {
  double in = 0.0;
  double out = 0.0;
  double unknown = 0.0;

  double total() const noexcept { return in + out + unknown; }
  friend bool operator==(const Dwell&, const Dwell&) = default;
};

struct AtomViolations {
  Atom atom;
  std::uint64_t count = 0;

  friend bool operator==(const AtomViolations&, const AtomViolations&) = default;
};

/// Running state of one ODD monitor. Single owner; advance it with
/// `monitor_step`.
struct MonitorState {
  WellFormedSpec spec;
  Taxonomy taxonomy;
  std::optional<Verdict> last_verdict;
  std::optional<double> first_t;
  std::optional<double> last_t;
  SampleCounters counters;
  std::vector<MonitorEvent> events;
  /// One entry per atom of the spec, in `atoms()` order.
  std::vector<AtomViolations> atom_violations;

  /// Dwell including the still-open run that started at `run_start`.
  Dwell dwell() const;

  // Closed runs, compensated sums. See dwell().
  Dwell closed_dwell;
  Dwell closed_dwell_carry;
  double run_start = 0.0;
};

/// Fresh state. Throws MismatchError if the spec was checked against a
/// different taxonomy version.
MonitorState monitor_init(const WellFormedSpec& spec, const Taxonomy& taxonomy);

struct StepResult {
  Verdict verdict = Verdict::Unknown;
  std::vector<MonitorEvent> events;
};

/// Evaluates `cod`, updates counters and dwell, and emits an event for every
/// verdict transition. Unknown counts as outside the ODD for entry/exit:
///
///   first sample: True -> Entry, False -> Exit, Unknown -> UnknownStart
///   True -> False: Exit                 False -> True: Entry
///   True -> Unknown: Exit, UnknownStart Unknown -> True: UnknownEnd, Entry
///   False -> Unknown: UnknownStart      Unknown -> False: UnknownEnd
///
/// Throws MonitorError if `cod.t` does not exceed the previous sample time,
/// MismatchError on arity or version mismatch. The state is unchanged when
/// an exception is thrown.
StepResult monitor_step(MonitorState& state, const Lod& cod);

struct MonitorReport {
  SampleCounters counters;
  Dwell dwell;
  std::vector<MonitorEvent> events;
  std::vector<AtomViolations> atom_violations;

  friend bool operator==(const MonitorReport&, const MonitorReport&) = default;
};

MonitorReport make_report(const MonitorState& state);

/// Folds `monitor_step` over every sample of `trace`.
MonitorReport run_monitor(const WellFormedSpec& spec, const Taxonomy& taxonomy, const Trace& trace);

/// Report document: samples, dwell_s, events and atom_violations, with atoms
/// rendered in canonical spec text. Two-space indentation, trailing newline.
std::string report_to_json(const MonitorReport& report);

}  // namespace odd
