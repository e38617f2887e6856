#pragma once

#include <optional>
#include <vector>

#include "odd/domain.hpp"
#include "odd/spec.hpp"
#include "odd/taxonomy.hpp"

namespace odd {

/// Three-valued truth (strong Kleene).
enum class Verdict { False, Unknown, True };

constexpr Verdict verdict_not(Verdict v) noexcept {
  switch (v) {
    case Verdict::True: return Verdict::False;
    case Verdict::False: return Verdict::True;
    default: return Verdict::Unknown;
  }
}

constexpr Verdict verdict_and(Verdict a, Verdict b) noexcept {
  if (a == Verdict::False || b == Verdict::False) return Verdict::False;
  if (a == Verdict::True && b == Verdict::True) return Verdict::True;
  return Verdict::Unknown;
}

constexpr Verdict verdict_or(Verdict a, Verdict b) noexcept {
  return verdict_not(verdict_and(verdict_not(a), verdict_not(b)));
}

constexpr Verdict to_verdict(bool b) noexcept { return b ? Verdict::True : Verdict::False; }

/// `true`, `false` or `unknown`.
const char* to_string(Verdict v) noexcept;

/// Truth of one statement on `lod`. Unknown when the attribute is unmeasured.
/// Throws MismatchError when the atom does not fit the taxonomy or the lod.
Verdict eval_atom(const Atom& atom, const Lod& lod, const Taxonomy& taxonomy);

/// Truth of the whole specification on `lod`. Only the attributes the spec
/// mentions are read.
Verdict eval_spec(const WellFormedSpec& spec, const Lod& lod);

/// Same as `eval_spec` on a bare value tuple of the spec's taxonomy.
Verdict eval_spec(const WellFormedSpec& spec, const ValueTuple& values);

/// ODD membership for a fully known sample. Throws UnknownValueError when a
/// mentioned attribute is Unknown.
bool in_odd(const WellFormedSpec& spec, const Lod& lod);

/// Lazily filters the operational domain down to the tuples that satisfy
/// the spec.
class OddEnumeration {
 public:
  OddEnumeration(const Taxonomy& taxonomy, WellFormedSpec spec);

  std::optional<ValueTuple> next();

 private:
  OdEnumeration od_;
  WellFormedSpec spec_;
};

/// Throws InfiniteDomainError like `enumerate_od`, and MismatchError when the
/// spec was checked against a different taxonomy version.
OddEnumeration enumerate_odd(const Taxonomy& taxonomy, const WellFormedSpec& spec);

/// Why a sample got its verdict.
///
/// `falsified_atoms` lists atoms that are false and occur under an even
/// number of negations somewhere in the spec; atoms that only occur negated
/// are never reported as falsified. `unknown_atoms` lists atoms whose
/// attribute is unmeasured. Both follow `atoms()` order.
struct Diagnosis {
  Verdict verdict = Verdict::Unknown;
  std::vector<Atom> falsified_atoms;
  std::vector<Atom> unknown_atoms;

  friend bool operator==(const Diagnosis&, const Diagnosis&) = default;
};

Diagnosis diagnose(const WellFormedSpec& spec, const Lod& lod);

}  // namespace odd
