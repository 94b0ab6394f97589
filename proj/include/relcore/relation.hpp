#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "relcore/attribute_set.hpp"
#include "relcore/rational.hpp"

namespace relcore {

using Value = std::string;
/// Values in schema order (the schema is lexicographically sorted).
using Tuple = std::vector<Value>;

/// Partial binding of attributes to values.
class Assignment {
 public:
  Assignment() = default;
  Assignment(std::initializer_list<std::pair<AttributeId, Value>> bindings);

  void bind(const AttributeId& a, const Value& v);
  bool binds(const AttributeId& a) const;
  const Value* value_of(const AttributeId& a) const;
  AttributeSet attributes() const;
  bool empty() const { return bindings_.empty(); }
  std::size_t size() const { return bindings_.size(); }
  const std::vector<std::pair<AttributeId, Value>>& bindings() const { return bindings_; }

  /// Union of two assignments; rebinding an attribute to a different value
  /// is an argument error.
  Assignment merged_with(const Assignment& o) const;

 private:
  std::vector<std::pair<AttributeId, Value>> bindings_;  // sorted by attribute
};

/// Bag-semantics relation. Rows are stored as distinct tuples with exact
/// multiplicities; all operations treat a tuple of multiplicity k exactly
/// like k duplicate rows.
class Relation {
 public:
  Relation() = default;
  Relation(std::string name, AttributeSet schema);

  static Relation from_rows(std::string name, AttributeSet schema,
                            const std::vector<Tuple>& rows);

  /// Adds `count` copies of a row given in schema (sorted-attribute) order.
  void add_row(const Tuple& row, std::uint64_t count = 1);
  /// Adds `count` copies of a row; the assignment must bind the full schema.
  void add_row(const Assignment& row, std::uint64_t count = 1);

  const std::string& name() const { return name_; }
  const AttributeSet& schema() const { return schema_; }
  std::uint64_t n_rows() const { return total_; }
  std::size_t distinct_size() const { return tuples_.size(); }
  const std::vector<Tuple>& tuples() const { return tuples_; }
  const std::vector<std::uint64_t>& counts() const { return counts_; }

  /// Rows with duplicates expanded, sorted lexicographically.
  std::vector<Tuple> expanded_rows() const;

  std::size_t column_index(const AttributeId& a) const;  // schema_error if absent
  std::vector<std::size_t> column_indices(const AttributeSet& attrs) const;

  /// Names of the base relations this relation was built from and the join
  /// attributes used along the way (empty for relations built directly).
  const std::vector<std::string>& base_names() const { return base_names_; }
  const AttributeSet& join_attrs_used() const { return join_attrs_used_; }
  void set_provenance(std::vector<std::string> base_names, AttributeSet join_attrs);

 private:
  std::string name_;
  AttributeSet schema_;
  std::vector<Tuple> tuples_;
  std::vector<std::uint64_t> counts_;
  std::uint64_t total_ = 0;
  std::vector<std::string> base_names_;
  AttributeSet join_attrs_used_;

  std::size_t find_or_insert(const Tuple& row);
  std::unordered_map<std::string, std::size_t> lookup_;  // packed tuple -> slot
};

/// Packs selected columns of a tuple into a single grouping key.
std::string pack_key(const Tuple& row, const std::vector<std::size_t>& cols);

/// Natural join: equality on all common attributes; cross product when the
/// schemas are disjoint. Multiplicities multiply.
Relation natural_join(const Relation& r, const Relation& s);

/// Duplicate-preserving projection; attrs must be a subset of the schema.
Relation project(const Relation& r, const AttributeSet& attrs);

/// Number of rows matching every binding; the empty assignment counts all rows.
std::uint64_t count(const Relation& r, const Assignment& a);

/// Pr_R[target | given] as an exact rational. Conditioning on an event with
/// zero support raises distribution_error.
Rational probability(const Relation& r, const Assignment& target, const Assignment& given);

/// Exact conditional-independence oracle: true iff for every value
/// combination with support, N_xyz * N_z == N_xz * N_yz. Empty z tests
/// marginal independence.
bool empirical_ci(const Relation& r, const AttributeSet& x, const AttributeSet& y,
                  const AttributeSet& z);

/// True iff no two rows agree on x and differ on y.
bool functional_dependency_holds(const Relation& r, const AttributeSet& x,
                                 const AttributeSet& y);

/// True iff attrs is a key of `referenced` and every attrs-value of
/// `referencing` occurs in `referenced`.
bool validate_foreign_key(const Relation& referencing, const Relation& referenced,
                          const AttributeSet& attrs);

/// True iff attrs has no duplicate value combinations in r.
bool is_key(const Relation& r, const AttributeSet& attrs);

}  // namespace relcore
