#pragma once

#include <initializer_list>
#include <string>
#include <vector>

namespace relcore {

using AttributeId = std::string;

/// Ordered set of attribute names. Comparison is case-sensitive; iteration
/// order is always lexicographic, which keeps every downstream report
/// deterministic.
class AttributeSet {
 public:
  AttributeSet() = default;
  AttributeSet(std::initializer_list<AttributeId> names);
  explicit AttributeSet(std::vector<AttributeId> names);

  static AttributeSet single(const AttributeId& a) { return AttributeSet({a}); }

  bool contains(const AttributeId& a) const;
  bool empty() const { return names_.empty(); }
  std::size_t size() const { return names_.size(); }

  AttributeSet set_union(const AttributeSet& o) const;
  AttributeSet set_intersection(const AttributeSet& o) const;
  AttributeSet set_difference(const AttributeSet& o) const;
  bool subset_of(const AttributeSet& o) const;
  bool disjoint_with(const AttributeSet& o) const;

  const std::vector<AttributeId>& names() const { return names_; }
  auto begin() const { return names_.begin(); }
  auto end() const { return names_.end(); }

  /// Comma-joined names; "{}" for the empty set.
  std::string to_string() const;

  bool operator==(const AttributeSet& o) const { return names_ == o.names_; }
  bool operator!=(const AttributeSet& o) const { return names_ != o.names_; }
  bool operator<(const AttributeSet& o) const { return names_ < o.names_; }

 private:
  std::vector<AttributeId> names_;  // sorted, unique
};

}  // namespace relcore
