#pragma once

#include <optional>
#include <random>
#include <string>

#include "relcore/relation.hpp"
#include "ugm/graph.hpp"

namespace ugm {

using relcore::Relation;

struct FactorModelOptions {
  std::size_t domain_size = 2;  // values per vertex: "0", "1", ...
  int max_factor = 3;           // per-edge factors drawn uniformly from [1, max_factor]
};

/// Synthesizes a relation whose tuple multiplicities are products of random
/// positive per-edge factors, N(t) = prod f_uv(t[u], t[v]). The frequency
/// distribution factorizes over the graph, so every separation of g is a CI
/// of the result (g is an I-map by construction) and the distribution is
/// strictly positive over the full value grid.
Relation synthesize_factor_relation(const UndirectedGraph& g, std::mt19937_64& rng,
                                    const FactorModelOptions& opts = {},
                                    const std::string& name = "R");

/// Rejection-samples factor relations until g verifies as a P-map of the
/// result (non-perfect draws happen when a factor accidentally creates an
/// extra independence). Empty when max_tries draws all fail.
std::optional<Relation> generate_pmap_instance(const UndirectedGraph& g, std::mt19937_64& rng,
                                               const FactorModelOptions& opts = {},
                                               int max_tries = 50, const std::string& name = "R");

/// Random connected graph: a random spanning tree plus extra edges.
UndirectedGraph random_connected_graph(const std::vector<AttributeId>& vertices,
                                       std::mt19937_64& rng, double extra_edge_prob = 0.25);

}  // namespace ugm
