#pragma once

#include <string>
#include <vector>

#include "gaxioms/ci_statement.hpp"
#include "gaxioms/closure.hpp"

namespace gaxioms {

/// One failed instance of a Theorem-2.7 axiom schema.
struct IsomorphViolation {
  Axiom axiom;
  std::vector<CIStatement> premises;
  /// Absent statements. For transitivity these are the two alternatives
  /// (either would satisfy the schema); for the other axioms every listed
  /// statement is required.
  std::vector<CIStatement> missing;

  std::string describe() const;
};

struct IsomorphReport {
  std::vector<IsomorphViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks whether the set is closed under the five graph-isomorph axiom
/// schemas {symmetry, decomposition, intersection, strong union,
/// transitivity} over its universe. Transitivity is checked as a constraint,
/// never used as a production rule.
IsomorphReport check_graph_isomorph_axioms(const CISet& s, const ClosureBounds& bounds = {});

}  // namespace gaxioms
