#include "ugm/maps.hpp"

#include <algorithm>

#include "relcore/errors.hpp"
#include "relcore/measures.hpp"

namespace ugm {

using relcore::argument_error;
using relcore::precondition_error;
using relcore::resource_limit_error;

bool RelationOracle::holds(const AttributeSet& x, const AttributeSet& y,
                           const AttributeSet& z) const {
  return relcore::empirical_ci(r_, x, y, z);
}

bool SetOracle::holds(const AttributeSet& x, const AttributeSet& y,
                      const AttributeSet& z) const {
  return s_.contains(CIStatement(x, z, y, context_));
}

namespace {

/// Enumerates canonical disjoint triples (X, Z, Y) with non-empty X, Y by
/// assigning each vertex to one of {X, Z, Y, out}.
template <typename F>
void for_each_triple(const AttributeSet& vertices, std::size_t limit, F&& f) {
  const auto& names = vertices.names();
  std::size_t n = names.size();
  std::vector<int> assign(n, 0);
  while (true) {
    std::vector<std::string> xs, ys, zs;
    for (std::size_t i = 0; i < n; ++i) {
      if (assign[i] == 1) xs.push_back(names[i]);
      else if (assign[i] == 2) ys.push_back(names[i]);
      else if (assign[i] == 3) zs.push_back(names[i]);
    }
    if (!xs.empty() && !ys.empty() && xs < ys &&
        (limit == 0 ||
         (xs.size() <= limit && ys.size() <= limit && zs.size() <= limit))) {
      f(AttributeSet(std::move(xs)), AttributeSet(std::move(ys)), AttributeSet(std::move(zs)));
    }
    std::size_t i = 0;
    for (; i < n; ++i) {
      if (++assign[i] <= 3) break;
      assign[i] = 0;
    }
    if (i == n) break;
  }
}

}  // namespace

MapVerdict verify_map(const UndirectedGraph& g, const CiOracle& oracle, MapKind kind,
                      std::size_t limit) {
  if (g.vertices() != oracle.universe())
    throw argument_error("graph vertices " + g.vertices().to_string() +
                         " differ from the oracle universe " + oracle.universe().to_string());
  if (limit == 0 && g.vertices().size() > 8)
    throw resource_limit_error("exhaustive map verification is bounded at 8 vertices; got " +
                               std::to_string(g.vertices().size()) +
                               " (pass a subset-size limit)");
  if (g.vertices().size() > 16)
    throw resource_limit_error("map verification is bounded at 16 vertices");

  MapVerdict verdict;
  verdict.kind = kind;
  verdict.holds = true;
  for_each_triple(g.vertices(), limit, [&](const AttributeSet& x, const AttributeSet& y,
                                           const AttributeSet& z) {
    ++verdict.triples_checked;
    bool sep = separated(g, x, y, z);
    bool fails = false;
    switch (kind) {
      case MapKind::i_map: fails = sep && !oracle.holds(x, y, z); break;
      case MapKind::d_map: fails = !sep && oracle.holds(x, y, z); break;
      case MapKind::p_map: fails = sep != oracle.holds(x, y, z); break;
    }
    if (fails) {
      verdict.holds = false;
      if (verdict.counterexamples.size() < kCounterexampleCap)
        verdict.counterexamples.emplace_back(x, z, y, "");
    }
  });
  return verdict;
}

CIStatement pmap_propagate(const UndirectedGraph& g1, const std::string& relation_name,
                           const AttributeId& d, const CIStatement& ci) {
  if (!g1.vertices().contains(d))
    throw precondition_error("join attribute " + d + " is not a vertex of the P-map");
  if (ci.context() != relation_name)
    throw argument_error("statement " + ci.to_string() + " is not scoped to " + relation_name);
  if (!separated(g1, ci.lhs_a(), ci.lhs_b(), ci.cond()))
    throw precondition_error("statement " + ci.to_string() +
                             " is not a separation of the P-map");
  return CIStatement(ci.lhs_a(), ci.cond(), ci.lhs_b(), gaxioms::kJoinContext);
}

EitherOrBranch either_or(const UndirectedGraph& g, const AttributeSet& x, const AttributeSet& y,
                         const AttributeSet& z, const AttributeId& d) {
  if (x.contains(d) || y.contains(d) || z.contains(d))
    throw precondition_error("attribute " + d + " must lie outside the separated triple");
  if (!separated(g, x, y, z))
    throw precondition_error("either-or requires separated(x, y, z) to hold");
  AttributeSet ds = AttributeSet::single(d);
  bool y_branch = separated(g, x, y.set_union(ds), z);
  bool x_branch = separated(g, x.set_union(ds), y, z);
  if (y_branch && x_branch) return EitherOrBranch::both;
  if (y_branch) return EitherOrBranch::y_side;
  if (x_branch) return EitherOrBranch::x_side;
  // Impossible for consistent inputs: a d connected to both sides without z
  // would connect x and y.
  throw precondition_error("neither branch separated; inputs violate the lemma's premise");
}

UndirectedGraph union_imap(const UndirectedGraph& g1, const UndirectedGraph& g2,
                           const AttributeId& d) {
  AttributeSet shared = g1.vertices().set_intersection(g2.vertices());
  if (shared != AttributeSet::single(d))
    throw precondition_error("graphs must share exactly the join vertex " + d + "; they share " +
                             shared.to_string());
  if (!g1.connected())
    throw precondition_error("first P-map is not connected");
  if (!g2.connected())
    throw precondition_error("second P-map is not connected");
  return graph_union(g1, g2);
}

MinimalImapResult build_minimal_imap(const Relation& r) {
  if (r.schema().size() > 8)
    throw resource_limit_error("minimal I-map construction is bounded at 8 attributes");
  if (r.n_rows() == 0) throw relcore::distribution_error("empty relation " + r.name());

  // Strict positivity over the observed value grid: every combination of
  // observed per-attribute values must occur.
  std::uint64_t grid = 1;
  for (const auto& a : r.schema()) {
    AttributeSet single = AttributeSet::single(a);
    grid *= project(r, single).distinct_size();
  }
  bool positive = r.distinct_size() == grid;

  RelationOracle oracle(r);
  MinimalImapResult out;
  out.graph = UndirectedGraph(r.schema());
  const auto& names = r.schema().names();
  for (std::size_t i = 0; i < names.size(); ++i) {
    for (std::size_t j = i + 1; j < names.size(); ++j) {
      AttributeSet a = AttributeSet::single(names[i]);
      AttributeSet b = AttributeSet::single(names[j]);
      AttributeSet rest = r.schema().set_difference(a.set_union(b));
      if (!oracle.holds(a, b, rest)) out.graph.add_edge(names[i], names[j]);
    }
  }
  out.positivity_verified = positive;
  out.note = positive ? "minimal I-map over a strictly positive value grid"
                      : "unverified-minimal: distribution is not strictly positive, the "
                        "intersection axiom may fail";
  return out;
}

MinimalImapResult build_minimal_imap(const CiOracle& oracle) {
  AttributeSet universe = oracle.universe();
  if (universe.size() > 8)
    throw resource_limit_error("minimal I-map construction is bounded at 8 attributes");
  MinimalImapResult out;
  out.graph = UndirectedGraph(universe);
  const auto& names = universe.names();
  for (std::size_t i = 0; i < names.size(); ++i) {
    for (std::size_t j = i + 1; j < names.size(); ++j) {
      AttributeSet a = AttributeSet::single(names[i]);
      AttributeSet b = AttributeSet::single(names[j]);
      AttributeSet rest = universe.set_difference(a.set_union(b));
      if (!oracle.holds(a, b, rest)) out.graph.add_edge(names[i], names[j]);
    }
  }
  out.positivity_verified = false;
  out.note = "positivity not checkable through a CI-set oracle; treated as trusted input";
  return out;
}

}  // namespace ugm
