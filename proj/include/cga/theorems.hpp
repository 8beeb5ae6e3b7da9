#pragma once

// Closed-form Casimir families: the d=1 quartic (l >= 5/2), the d=2 quadratic
// (l >= 1) and the d=2 quartic (l >= 3), each expanded into PBW form term by
// term so that mismatches can be traced to a single named coefficient.

#include <optional>
#include <string>
#include <vector>

#include "cga/liealg.hpp"
#include "cga/solver.hpp"
#include "cga/uea.hpp"

namespace cga {

enum class TheoremKind { Quadratic, Quartic };
/// Two readings of the d=2 quartic U_ij family: a sum of four products
/// (Split) or the first two products multiplied together (Literal).
enum class UReading { Split, Literal };

std::string to_string(TheoremKind k);
TheoremKind parse_theorem_kind(const std::string& s);
std::string to_string(UReading r);
UReading parse_u_reading(const std::string& s);

class OutOfTheoremRange : public InvalidSpec {
 public:
  using InvalidSpec::InvalidSpec;
};

struct TheoremOptions {
  UReading reading = UReading::Split;
  /// Also add families whose index lies outside the stated ranges, with the
  /// nearest general formula evaluated there.
  bool extend_ranges = false;
};

struct TheoremTerm {
  std::string name;  // e.g. "tau[0,1]"
  Rational value;    // the closed-form coefficient
  UEAElement family; // the coefficient-free sum of products, normal-ordered
  bool extrapolated = false;
};

struct TheoremExpansion {
  std::string theorem;  // "d1-quartic", "d2-quadratic", "d2-quartic"
  AlgebraSpec spec;
  TheoremKind kind;
  std::vector<TheoremTerm> terms;  // in-range terms first, then extrapolated ones

  /// Sum of value * family over the terms; extrapolated ones only if asked.
  UEAElement element(bool include_extrapolated = false) const;
};

/// Throws OutOfTheoremRange when (spec, kind) is outside the theorem's range.
TheoremExpansion expand_theorem(const AlgebraSpec& spec, TheoremKind kind, UReading reading = UReading::Split);

UEAElement build_theorem_casimir(const AlgebraSpec& spec, TheoremKind kind, const TheoremOptions& opts = {});

/// Grade and degree bound of the solver run a theorem is compared against.
TargetGrade theorem_target(const AlgebraSpec& spec, TheoremKind kind);

struct CoefficientCheck {
  std::string name;
  Rational stated;  // closed form; 0 for extrapolated families not in the statement
  Rational fitted;  // value making the family sum equal scale * solver canonical
  bool extrapolated = false;
  bool matches = false;
};

struct TheoremReport {
  std::string theorem;
  AlgebraSpec spec;
  TheoremKind kind;
  UReading reading;
  bool extend_ranges = false;
  UEAElement element;                       // the built closed form
  std::optional<VerifyFailure> failure;     // first failing generator, if any
  bool in_casimir_span = false;
  Rational scale;                           // element ~ scale * solver canonical
  std::vector<CoefficientCheck> coefficients;
  bool fit_consistent = true;               // families can reproduce the canonical form
  UEAElement unaccounted;                   // part of scale * canonical no family covers
  UEAElement stray;                         // monomials of the element outside the solver ansatz
  UEAElement corrected;                     // scale * solver canonical
  bool corrected_verified = false;

  bool verified() const { return !failure && in_casimir_span; }
  std::vector<const CoefficientCheck*> mismatches() const;
};

TheoremReport check_theorem(const AlgebraSpec& spec, TheoremKind kind, const TheoremOptions& opts = {},
                            const SolveOptions& solve = {});

}  // namespace cga
