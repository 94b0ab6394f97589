#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gaxioms/ci_statement.hpp"

namespace gaxioms {

enum class Axiom {
  symmetry,
  decomposition,
  weak_union,
  contraction,
  intersection,
  strong_union,
  transitivity,
};

const char* axiom_name(Axiom a);

/// Result of one axiom application. Horn-style axioms fill `conclusions`;
/// transitivity fills `branches`: per eligible attribute, a pair of
/// statements at least one of which must hold.
struct AxiomApplication {
  std::vector<CIStatement> conclusions;
  std::vector<std::pair<CIStatement, CIStatement>> branches;
  bool applicable = false;
};

/// Applies one axiom schema to the given premises (modulo symmetry of the
/// canonical form). A pattern mismatch yields an inapplicable result, not an
/// exception.
AxiomApplication apply_axiom(Axiom axiom, const std::vector<CIStatement>& premises,
                             const AttributeSet& universe);

enum class ClosureMode { semigraphoid, graphoid };

struct ClosureBounds {
  std::size_t max_universe = 12;
  std::size_t max_statements = 2'000'000;
};

struct DerivationStep {
  Axiom axiom;
  std::vector<CIStatement> inputs;
  CIStatement output;
};

struct DerivationTrace {
  std::vector<DerivationStep> steps;  // inputs of each step precede it
  bool empty() const { return steps.empty(); }
};

/// Least fixed point of {symmetry, decomposition, weak union, contraction}
/// (plus intersection in graphoid mode) over the finite triple space of the
/// universe. Statements combine only within their own context.
CISet closure(const CISet& base, ClosureMode mode, const ClosureBounds& bounds = {});

/// Membership of `goal` in closure(base, mode), with a replayable trace.
/// False means "not derivable under the axioms", never "independence fails".
std::pair<bool, std::optional<DerivationTrace>> derivable(const CISet& base,
                                                          const CIStatement& goal,
                                                          ClosureMode mode,
                                                          const ClosureBounds& bounds = {});

}  // namespace gaxioms
