#include "oddctl/commands.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "odd/odd.hpp"

namespace odd::cli {
namespace {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("cannot read '" + path + "'");
  return buf.str();
}

Taxonomy load_taxonomy(const std::string& path) {
  std::string text = read_file(path);
  try {
    return parse_taxonomy(text);
  } catch (const Error& e) {
    throw Error(path + ":" + (dynamic_cast<const TaxonomySyntaxError*>(&e) ? "" : " ") + e.what());
  }
}

WellFormedSpec load_spec(const std::string& path, const Taxonomy& taxonomy, std::ostream& err) {
  std::string text = read_file(path);
  try {
    WellFormedSpec spec = check_spec(parse_spec(text), taxonomy);
    for (const auto& w : spec.warnings()) err << "warning: " << path << ": " << w << "\n";
    return spec;
  } catch (const SpecSyntaxError& e) {
    throw Error(path + ":" + e.what());
  } catch (const Error& e) {
    throw Error(path + ": " + e.what());
  }
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += sep;
    s += parts[i];
  }
  return s;
}

void print_tuple(std::ostream& out, const ValueTuple& tuple) {
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (i) out << ',';
    out << to_string(tuple[i]);
  }
  out << '\n';
}

// ---------------------------------------------------------------------------

int cmd_validate(const std::string& taxonomy_path, std::ostream& out) {
  Taxonomy taxonomy = load_taxonomy(taxonomy_path);
  std::size_t width = 4;
  for (const auto& a : taxonomy.attributes()) width = std::max(width, a.name.size());

  out << "version: " << taxonomy.version() << "\n";
  out << "attributes: " << taxonomy.size() << "\n";
  for (const auto& a : taxonomy.attributes()) {
    out << "  " << a.name << std::string(width - a.name.size() + 2, ' ') << describe(a.type) << "\n";
  }
  out << "cardinality: " << to_string(domain_cardinality(taxonomy)) << "\n";
  return kSuccess;
}

int cmd_check(const std::string& taxonomy_path, const std::string& spec_path, std::ostream& out, std::ostream& err) {
  Taxonomy taxonomy = load_taxonomy(taxonomy_path);
  WellFormedSpec spec = load_spec(spec_path, taxonomy, err);
  out << serialize_spec(spec.ast()) << "\n";
  out << "mentioned: " << join(spec.mentioned_attributes(), ", ") << "\n";
  return kSuccess;
}

int cmd_eval(const std::string& taxonomy_path, const std::string& spec_path, const std::string& lod_arg,
             std::ostream& out, std::ostream& err) {
  Taxonomy taxonomy = load_taxonomy(taxonomy_path);
  WellFormedSpec spec = load_spec(spec_path, taxonomy, err);

  auto first = lod_arg.find_first_not_of(" \t\r\n");
  bool inline_record = first != std::string::npos && lod_arg[first] == '{';
  std::string record = inline_record ? lod_arg : read_file(lod_arg);
  Lod lod;
  try {
    lod = parse_lod_record(record, taxonomy);
  } catch (const TraceError& e) {
    throw Error(std::string(inline_record ? "--lod" : lod_arg) + ": " + e.what());
  }

  Diagnosis d = diagnose(spec, lod);
  out << to_string(d.verdict) << "\n";
  for (const auto& a : d.falsified_atoms) out << "falsified: " << to_string(a) << "\n";
  for (const auto& a : d.unknown_atoms) out << "unknown: " << to_string(a) << "\n";
  return kSuccess;
}

int cmd_enumerate(const std::string& taxonomy_path, const std::string& spec_path, std::ostream& out,
                  std::ostream& err) {
  Taxonomy taxonomy = load_taxonomy(taxonomy_path);
  if (spec_path.empty()) {
    OdEnumeration od = enumerate_od(taxonomy);
    while (auto t = od.next()) print_tuple(out, *t);
  } else {
    WellFormedSpec spec = load_spec(spec_path, taxonomy, err);
    OddEnumeration odd = enumerate_odd(taxonomy, spec);
    while (auto t = odd.next()) print_tuple(out, *t);
  }
  return kSuccess;
}

int cmd_monitor(const std::string& taxonomy_path, const std::string& spec_path, const std::string& trace_path,
                const std::string& report_path, bool fail_on_exit, std::ostream& out, std::ostream& err) {
  Taxonomy taxonomy = load_taxonomy(taxonomy_path);
  WellFormedSpec spec = load_spec(spec_path, taxonomy, err);

  std::ifstream in(trace_path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + trace_path + "'");

  MonitorState state = monitor_init(spec, taxonomy);
  TraceReader reader(in, taxonomy);
  try {
    while (auto sample = reader.next()) {
      StepResult step = monitor_step(state, *sample);
      out << "t=" << format_real(sample->t) << " verdict=" << to_string(step.verdict) << "\n";
    }
  } catch (const Error& e) {
    out.flush();
    throw Error(trace_path + ": " + e.what());
  }
  if (state.counters.total == 0) throw Error(trace_path + ": trace has no samples");

  MonitorReport report = make_report(state);
  if (!report_path.empty()) {
    std::ofstream file(report_path, std::ios::binary | std::ios::trunc);
    if (!file) throw IoError("cannot write '" + report_path + "'");
    file << report_to_json(report);
    if (!file.flush()) throw IoError("cannot write '" + report_path + "'");
  }

  bool exited = std::any_of(report.events.begin(), report.events.end(),
                            [](const MonitorEvent& e) { return e.kind == MonitorEvent::Kind::Exit; });
  return fail_on_exit && exited ? kExitDetected : kSuccess;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Operational design domain toolkit: taxonomies, ODD specifications, evaluation and monitoring",
               "oddctl"};
  app.require_subcommand(1);

  std::string taxonomy, spec, lod, trace, report;
  bool fail_on_exit = false;

  auto* validate = app.add_subcommand("validate", "Validate a taxonomy and print its attributes and cardinality");
  validate->add_option("--taxonomy", taxonomy, "Taxonomy file")->required();

  auto* check = app.add_subcommand("check", "Check a specification against a taxonomy");
  check->add_option("--taxonomy", taxonomy, "Taxonomy file")->required();
  check->add_option("--spec", spec, "Specification file")->required();

  auto* eval = app.add_subcommand("eval", "Evaluate a specification on one LOD");
  eval->add_option("--taxonomy", taxonomy, "Taxonomy file")->required();
  eval->add_option("--spec", spec, "Specification file")->required();
  eval->add_option("--lod", lod, "LOD record file, or an inline record starting with '{'")->required();

  auto* enumerate = app.add_subcommand("enumerate", "List the OD, or the ODD when --spec is given");
  enumerate->add_option("--taxonomy", taxonomy, "Taxonomy file")->required();
  enumerate->add_option("--spec", spec, "Specification file");

  auto* monitor = app.add_subcommand("monitor", "Run the ODD monitor over a trace");
  monitor->add_option("--taxonomy", taxonomy, "Taxonomy file")->required();
  monitor->add_option("--spec", spec, "Specification file")->required();
  monitor->add_option("--trace", trace, "Line-delimited trace file")->required();
  monitor->add_option("--report", report, "Write the report document here");
  monitor->add_flag("--fail-on-exit", fail_on_exit, "Exit with status 3 if the monitor saw an ODD exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    if (auto* sub = app.get_subcommands().empty() ? nullptr : app.get_subcommands().front()) {
      err << "run 'oddctl " << sub->get_name() << " --help' for usage\n";
    } else {
      err << "run 'oddctl --help' for usage\n";
    }
    return kUsageError;
  }

  try {
    if (validate->parsed()) return cmd_validate(taxonomy, out);
    if (check->parsed()) return cmd_check(taxonomy, spec, out, err);
    if (eval->parsed()) return cmd_eval(taxonomy, spec, lod, out, err);
    if (enumerate->parsed()) return cmd_enumerate(taxonomy, spec, out, err);
    if (monitor->parsed()) return cmd_monitor(taxonomy, spec, trace, report, fail_on_exit, out, err);
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kValidationError;
  }
  return kUsageError;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"oddctl"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace odd::cli
