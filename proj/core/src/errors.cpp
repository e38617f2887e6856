#include "odd/errors.hpp"

namespace odd {
namespace {

std::string at(SourcePos pos, const std::string& detail) {
  return std::to_string(pos.line) + ":" + std::to_string(pos.column) + ": " + detail;
}

}  // namespace

TaxonomySyntaxError::TaxonomySyntaxError(SourcePos pos, const std::string& detail)
    : TaxonomyError(at(pos, detail)), pos_(pos) {}

SpecSyntaxError::SpecSyntaxError(SourcePos pos, const std::string& detail)
    : Error(at(pos, detail)), pos_(pos) {}

SpecCheckError::SpecCheckError(std::string atom_text, const std::string& detail)
    : Error("`" + atom_text + "`: " + detail), atom_text_(std::move(atom_text)) {}

TraceError::TraceError(std::size_t line, const std::string& detail)
    : Error(line == 0 ? detail : "line " + std::to_string(line) + ": " + detail), line_(line) {}

}  // namespace odd
