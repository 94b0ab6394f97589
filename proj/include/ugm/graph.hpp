#pragma once

#include <string>
#include <utility>
#include <vector>

#include "relcore/attribute_set.hpp"

namespace ugm {

using relcore::AttributeId;
using relcore::AttributeSet;

/// Undirected graph on attribute names. No self-loops; edges only between
/// declared vertices.
class UndirectedGraph {
 public:
  UndirectedGraph() = default;
  explicit UndirectedGraph(AttributeSet vertices) : vertices_(std::move(vertices)) {}

  void add_edge(const AttributeId& a, const AttributeId& b);
  bool has_edge(const AttributeId& a, const AttributeId& b) const;

  const AttributeSet& vertices() const { return vertices_; }
  /// Sorted pairs (a < b), sorted overall.
  const std::vector<std::pair<AttributeId, AttributeId>>& edges() const { return edges_; }

  std::vector<AttributeId> neighbors(const AttributeId& v) const;
  bool connected() const;

  /// Builds a path graph v0 - v1 - ... - vk.
  static UndirectedGraph chain(const std::vector<AttributeId>& vertices);

  bool operator==(const UndirectedGraph& o) const {
    return vertices_ == o.vertices_ && edges_ == o.edges_;
  }

 private:
  AttributeSet vertices_;
  std::vector<std::pair<AttributeId, AttributeId>> edges_;  // sorted, a < b
};

/// True iff every path between x and y intersects z (z is a cutset).
bool separated(const UndirectedGraph& g, const AttributeSet& x, const AttributeSet& y,
               const AttributeSet& z);

/// Deterministic DOT rendering, vertices sorted lexicographically.
std::string to_dot(const UndirectedGraph& g);

/// Edge union of two graphs on the union of their vertex sets.
UndirectedGraph graph_union(const UndirectedGraph& g1, const UndirectedGraph& g2);

/// Parses {"vertices":[...],"edges":[["A","B"],...]} (JSON text).
UndirectedGraph graph_from_json(const std::string& json_text);
std::string graph_to_json(const UndirectedGraph& g);

}  // namespace ugm
