#include "odd/monitor.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

#include "odd/errors.hpp"

namespace odd {

const char* to_string(MonitorEvent::Kind k) noexcept {
  switch (k) {
    case MonitorEvent::Kind::Entry: return "entry";
    case MonitorEvent::Kind::Exit: return "exit";
    case MonitorEvent::Kind::UnknownStart: return "unknown_start";
    case MonitorEvent::Kind::UnknownEnd: return "unknown_end";
  }
  return "?";
}

namespace {

double& bucket(Dwell& d, Verdict v) {
  switch (v) {
    case Verdict::True: return d.in;
    case Verdict::False: return d.out;
    default: return d.unknown;
  }
}

// Neumaier compensated addition.
void accumulate(double& sum, double& carry, double x) {
  double t = sum + x;
  if (std::fabs(sum) >= std::fabs(x)) {
    carry += (sum - t) + x;
  } else {
    carry += (x - t) + sum;
  }
  sum = t;
}

std::vector<MonitorEvent::Kind> transition(std::optional<Verdict> from, Verdict to) {
  using K = MonitorEvent::Kind;
  if (!from) {
    switch (to) {
      case Verdict::True: return {K::Entry};
      case Verdict::False: return {K::Exit};
      case Verdict::Unknown: return {K::UnknownStart};
    }
  }
  if (*from == to) return {};
  switch (*from) {
    case Verdict::True: return to == Verdict::Unknown ? std::vector{K::Exit, K::UnknownStart} : std::vector{K::Exit};
    case Verdict::False: return to == Verdict::Unknown ? std::vector{K::UnknownStart} : std::vector{K::Entry};
    case Verdict::Unknown: return to == Verdict::True ? std::vector{K::UnknownEnd, K::Entry} : std::vector{K::UnknownEnd};
  }
  return {};
}

}  // namespace

Dwell MonitorState::dwell() const {
  Dwell sum = closed_dwell;
  Dwell carry = closed_dwell_carry;
  if (last_verdict && last_t) accumulate(bucket(sum, *last_verdict), bucket(carry, *last_verdict), *last_t - run_start);
  return Dwell{sum.in + carry.in, sum.out + carry.out, sum.unknown + carry.unknown};
}

MonitorState monitor_init(const WellFormedSpec& spec, const Taxonomy& taxonomy) {
  if (spec.taxonomy_version() != taxonomy.version())
    throw MismatchError("spec was checked against taxonomy version '" + spec.taxonomy_version() + "', monitor uses '" +
                        taxonomy.version() + "'");
  MonitorState state{spec, taxonomy, {}, {}, {}, {}, {}, {}, {}, {}, 0.0};
  for (auto& a : atoms(spec.ast())) state.atom_violations.push_back({std::move(a), 0});
  return state;
}

StepResult monitor_step(MonitorState& state, const Lod& cod) {
  if (!std::isfinite(cod.t) || cod.t < 0.0) throw MonitorError("sample time must be finite and non-negative");
  if (state.last_t && !(cod.t > *state.last_t))
    throw MonitorError("sample time " + format_real(cod.t) + " does not advance past " + format_real(*state.last_t));
  if (cod.taxonomy_version != state.taxonomy.version())
    throw MismatchError("sample uses taxonomy version '" + cod.taxonomy_version + "', monitor uses '" +
                        state.taxonomy.version() + "'");

  // Everything that can throw happens before the state is touched.
  Diagnosis diagnosis = diagnose(state.spec, cod);
  const Verdict verdict = diagnosis.verdict;
  const std::size_t index = state.counters.total;

  StepResult result{verdict, {}};
  for (auto kind : transition(state.last_verdict, verdict)) result.events.push_back({kind, cod.t, index, diagnosis});

  if (state.last_verdict) {
    if (*state.last_verdict != verdict) {
      accumulate(bucket(state.closed_dwell, *state.last_verdict), bucket(state.closed_dwell_carry, *state.last_verdict),
                 cod.t - state.run_start);
      state.run_start = cod.t;
    }
  } else {
    state.first_t = cod.t;
    state.run_start = cod.t;
  }

  ++state.counters.total;
  switch (verdict) {
    case Verdict::True: ++state.counters.in; break;
    case Verdict::False: ++state.counters.out; break;
    case Verdict::Unknown: ++state.counters.unknown; break;
  }
  for (const Atom& a : diagnosis.falsified_atoms) {
    auto it = std::find_if(state.atom_violations.begin(), state.atom_violations.end(),
                           [&](const AtomViolations& v) { return v.atom == a; });
    if (it != state.atom_violations.end()) ++it->count;
  }
  state.events.insert(state.events.end(), result.events.begin(), result.events.end());
  state.last_verdict = verdict;
  state.last_t = cod.t;
  return result;
}

MonitorReport make_report(const MonitorState& state) {
  return MonitorReport{state.counters, state.dwell(), state.events, state.atom_violations};
}

MonitorReport run_monitor(const WellFormedSpec& spec, const Taxonomy& taxonomy, const Trace& trace) {
  MonitorState state = monitor_init(spec, taxonomy);
  for (const Lod& sample : trace.samples) monitor_step(state, sample);
  return make_report(state);
}

std::string report_to_json(const MonitorReport& report) {
  using json = nlohmann::ordered_json;
  json doc;
  doc["samples"] = {{"total", report.counters.total},
                    {"in", report.counters.in},
                    {"out", report.counters.out},
                    {"unknown", report.counters.unknown}};
  doc["dwell_s"] = {{"in", report.dwell.in}, {"out", report.dwell.out}, {"unknown", report.dwell.unknown}};

  json events = json::array();
  for (const auto& e : report.events) {
    json falsified = json::array();
    json unknown = json::array();
    for (const auto& a : e.diagnosis.falsified_atoms) falsified.push_back(to_string(a));
    for (const auto& a : e.diagnosis.unknown_atoms) unknown.push_back(to_string(a));
    events.push_back({{"kind", to_string(e.kind)},
                      {"t", e.t},
                      {"index", e.sample_index},
                      {"falsified", std::move(falsified)},
                      {"unknown", std::move(unknown)}});
  }
  doc["events"] = std::move(events);

  json violations = json::object();
  for (const auto& v : report.atom_violations) violations[to_string(v.atom)] = v.count;
  doc["atom_violations"] = std::move(violations);
  return doc.dump(2) + "\n";
}

}  // namespace odd
