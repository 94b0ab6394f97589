#pragma once

#include <string>
#include <vector>

#include "relcore/attribute_set.hpp"

namespace gaxioms {

using relcore::AttributeId;
using relcore::AttributeSet;

/// Context name for statements scoped to the joined relation.
inline const std::string kJoinContext = "JOIN";

/// "lhs_a independent of lhs_b given cond", scoped to a relation context.
/// Stored canonically: the two sides are ordered so that symmetry-equivalent
/// statements compare equal.
class CIStatement {
 public:
  CIStatement(AttributeSet x, AttributeSet z, AttributeSet y, std::string context);

  const AttributeSet& lhs_a() const { return lhs_a_; }
  const AttributeSet& cond() const { return cond_; }
  const AttributeSet& lhs_b() const { return lhs_b_; }
  const std::string& context() const { return context_; }

  AttributeSet all_attributes() const;

  /// Grammar form: "A,B _|_ C | D,E @ R"; an empty conditioning set is
  /// rendered as "|-".
  std::string to_string() const;

  bool operator==(const CIStatement& o) const;
  bool operator!=(const CIStatement& o) const { return !(*this == o); }
  bool operator<(const CIStatement& o) const;

 private:
  AttributeSet lhs_a_, cond_, lhs_b_;
  std::string context_;
};

/// Deduplicated set of CI statements over a declared attribute universe.
class CISet {
 public:
  CISet() = default;
  explicit CISet(AttributeSet universe) : universe_(std::move(universe)) {}

  /// Inserts (deduplicating under canonical form); statements must stay
  /// inside the universe. Returns true when the statement was new.
  bool insert(const CIStatement& s);
  bool contains(const CIStatement& s) const;

  const AttributeSet& universe() const { return universe_; }
  const std::vector<CIStatement>& statements() const { return statements_; }
  std::size_t size() const { return statements_.size(); }
  bool empty() const { return statements_.empty(); }
  auto begin() const { return statements_.begin(); }
  auto end() const { return statements_.end(); }

 private:
  AttributeSet universe_;
  std::vector<CIStatement> statements_;  // kept sorted
};

}  // namespace gaxioms
