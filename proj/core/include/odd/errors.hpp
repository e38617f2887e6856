#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace odd {

/// Root of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A 1-based line/column location inside a text document.
struct SourcePos {
  std::size_t line = 1;
  std::size_t column = 1;
};

/// Malformed taxonomy document or a taxonomy that breaks an invariant.
class TaxonomyError : public Error {
 public:
  using Error::Error;
};

/// Taxonomy text that is not a well-formed structured document.
class TaxonomySyntaxError : public TaxonomyError {
 public:
  TaxonomySyntaxError(SourcePos pos, const std::string& detail);
  SourcePos pos() const noexcept { return pos_; }

 private:
  SourcePos pos_;
};

/// Lexical or grammatical error in a specification document.
class SpecSyntaxError : public Error {
 public:
  SpecSyntaxError(SourcePos pos, const std::string& detail);
  SourcePos pos() const noexcept { return pos_; }

 private:
  SourcePos pos_;
};

/// Base for well-formedness failures found when checking a spec against a
/// taxonomy. `atom_text()` is the canonical rendering of the offending atom.
class SpecCheckError : public Error {
 public:
  SpecCheckError(std::string atom_text, const std::string& detail);
  const std::string& atom_text() const noexcept { return atom_text_; }

 private:
  std::string atom_text_;
};

class UnknownAttributeError : public SpecCheckError {
 public:
  using SpecCheckError::SpecCheckError;
};

class LiteralKindError : public SpecCheckError {
 public:
  using SpecCheckError::SpecCheckError;
};

class LiteralDomainError : public SpecCheckError {
 public:
  using SpecCheckError::SpecCheckError;
};

/// An ordering predicate used on an attribute whose type defines no order,
/// e.g. `road_type > motorway` on an unordered enum.
class PredicateNotApplicableError : public SpecCheckError {
 public:
  using SpecCheckError::SpecCheckError;
};

class UnitMismatchError : public SpecCheckError {
 public:
  using SpecCheckError::SpecCheckError;
};

/// Invalid input to LOD construction (unknown attribute, value outside its
/// data type, negative time).
class LodError : public Error {
 public:
  using Error::Error;
};

/// Enumeration requested over an operational domain that is not finite.
class InfiniteDomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed or out-of-order trace record. `line()` is 1-based; 0 when the
/// error is not tied to a line.
class TraceError : public Error {
 public:
  TraceError(std::size_t line, const std::string& detail);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Sample lookup before the first sample of a trace.
class TimeRangeError : public Error {
 public:
  using Error::Error;
};

/// Spec, taxonomy and LOD disagree on taxonomy version or arity.
class MismatchError : public Error {
 public:
  using Error::Error;
};

/// ODD membership asked for a sample whose mentioned attributes are not all
/// known.
class UnknownValueError : public Error {
 public:
  using Error::Error;
};

/// Monitor fed a sample that does not advance time.
class MonitorError : public Error {
 public:
  using Error::Error;
};

}  // namespace odd
