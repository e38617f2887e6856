#include "golden.hpp"

#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace odd::testing {

namespace fs = std::filesystem;

std::vector<std::string> split_words(const std::string& line) {
  std::vector<std::string> words;
  std::string word;
  bool in_word = false, quoted = false;
  for (char c : line) {
    if (quoted) {
      if (c == '\'') quoted = false;
      else word += c;
    } else if (c == '\'') {
      quoted = in_word = true;
    } else if (c == ' ' || c == '\t') {
      if (in_word) words.push_back(std::move(word));
      word.clear();
      in_word = false;
    } else {
      word += c;
      in_word = true;
    }
  }
  if (quoted) throw std::invalid_argument("unterminated quote: " + line);
  if (in_word) words.push_back(std::move(word));
  return words;
}

std::string read_text(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<GoldenCase> load_golden_cases(const fs::path& cases_file) {
  std::istringstream in(read_text(cases_file));
  std::vector<GoldenCase> cases;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto words = split_words(line);
    if (words.size() < 4) throw std::invalid_argument("short golden line: " + line);
    GoldenCase c;
    c.name = words[0];
    c.exit_code = std::stoi(words[1]);
    if (words[2] != "-") c.report = words[2];
    c.args.assign(words.begin() + 3, words.end());
    cases.push_back(std::move(c));
  }
  return cases;
}

void PrintTo(const GoldenCase& c, std::ostream* os) { *os << c.name; }

namespace {

struct CurrentDir {
  fs::path saved = fs::current_path();
  explicit CurrentDir(const fs::path& dir) { fs::current_path(dir); }
  ~CurrentDir() { fs::current_path(saved); }
};

}  // namespace

std::string check_golden_case(const GoldenCase& c, const CliRunner& run, const fs::path& data_dir,
                              const fs::path& golden_dir) {
  fs::path report_out = fs::temp_directory_path() / ("odd_golden_" + c.name + ".report.json");
  fs::remove(report_out);
  std::vector<std::string> args = c.args;
  for (auto& a : args)
    if (a == "@REPORT@") a = report_out.string();

  std::ostringstream out, err;
  int status;
  {
    CurrentDir cd(data_dir);
    status = run(args, out, err);
  }
  if (status != c.exit_code)
    return c.name + ": exit " + std::to_string(status) + ", expected " + std::to_string(c.exit_code) +
           "; stderr: " + err.str();
  if (out.str() != read_text(golden_dir / (c.name + ".stdout")))
    return c.name + ": stdout differs:\n" + out.str();
  if (c.report) {
    std::string actual = read_text(report_out);
    fs::remove(report_out);
    if (actual != read_text(golden_dir / *c.report)) return c.name + ": report differs:\n" + actual;
  }
  return {};
}

}  // namespace odd::testing
