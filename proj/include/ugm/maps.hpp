#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gaxioms/ci_statement.hpp"
#include "relcore/relation.hpp"
#include "ugm/graph.hpp"

namespace ugm {

using gaxioms::CISet;
using gaxioms::CIStatement;
using relcore::Relation;

/// Answers "does X _|_ Y | Z hold" for map verification. Backed either by an
/// exact empirical test on a relation or by membership in a CI set.
class CiOracle {
 public:
  virtual ~CiOracle() = default;
  virtual bool holds(const AttributeSet& x, const AttributeSet& y,
                     const AttributeSet& z) const = 0;
  virtual AttributeSet universe() const = 0;
};

class RelationOracle : public CiOracle {
 public:
  explicit RelationOracle(const Relation& r) : r_(r) {}
  bool holds(const AttributeSet& x, const AttributeSet& y,
             const AttributeSet& z) const override;
  AttributeSet universe() const override { return r_.schema(); }

 private:
  const Relation& r_;
};

class SetOracle : public CiOracle {
 public:
  explicit SetOracle(const CISet& s, std::string context) : s_(s), context_(std::move(context)) {}
  bool holds(const AttributeSet& x, const AttributeSet& y,
             const AttributeSet& z) const override;
  AttributeSet universe() const override { return s_.universe(); }

 private:
  const CISet& s_;
  std::string context_;
};

enum class MapKind { d_map, i_map, p_map };

struct MapVerdict {
  MapKind kind;
  bool holds = false;
  /// Failing (X, Z, Y) triples, capped at kCounterexampleCap.
  std::vector<CIStatement> counterexamples;
  std::size_t triples_checked = 0;
};

inline constexpr std::size_t kCounterexampleCap = 10;

/// Verifies the map property by exhaustive triple enumeration.
/// limit == 0: fully exhaustive, allowed for at most 8 vertices.
/// limit > 0: only triples whose three subsets each have at most `limit`
/// attributes are enumerated.
MapVerdict verify_map(const UndirectedGraph& g, const CiOracle& oracle, MapKind kind,
                      std::size_t limit = 0);

/// Theorem's licensing step for a P-mapped base relation: every separation of
/// g1 propagates across a single-attribute join. Returns the statement
/// rescoped to the JOIN context. Preconditions: the join attribute is the
/// single vertex d and (X, Z, Y) is separated in g1.
CIStatement pmap_propagate(const UndirectedGraph& g1, const std::string& relation_name,
                           const AttributeId& d, const CIStatement& ci);

enum class EitherOrBranch {
  y_side,  // X _|_ Y+D | Z separated
  x_side,  // X+D _|_ Y | Z separated
  both,
};

/// Given separated(g, x, y, z) and d outside x, y, z: reports which of the
/// two d-absorbing separations holds (at least one must).
EitherOrBranch either_or(const UndirectedGraph& g, const AttributeSet& x, const AttributeSet& y,
                         const AttributeSet& z, const AttributeId& d);

/// Union of two connected P-maps sharing exactly the vertex d. Every
/// separation of the result is a valid CI of the joined relation.
UndirectedGraph union_imap(const UndirectedGraph& g1, const UndirectedGraph& g2,
                           const AttributeId& d);

struct MinimalImapResult {
  UndirectedGraph graph;
  /// True when the oracle distribution was verified strictly positive over
  /// its observed value grid; false results are flagged unverified-minimal
  /// (the intersection axiom may fail).
  bool positivity_verified = false;
  std::string note;
};

/// Minimal I-map construction: edge (a,b) absent iff a _|_ b | all-others.
MinimalImapResult build_minimal_imap(const Relation& r);
MinimalImapResult build_minimal_imap(const CiOracle& oracle);

}  // namespace ugm
