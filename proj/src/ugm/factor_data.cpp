#include "ugm/factor_data.hpp"

#include <map>

#include "relcore/errors.hpp"
#include "ugm/maps.hpp"

namespace ugm {

Relation synthesize_factor_relation(const UndirectedGraph& g, std::mt19937_64& rng,
                                    const FactorModelOptions& opts, const std::string& name) {
  if (opts.domain_size < 2) throw relcore::argument_error("domain size must be at least 2");
  const auto& names = g.vertices().names();
  std::size_t n = names.size();

  std::uniform_int_distribution<int> factor(1, opts.max_factor);
  std::map<std::pair<std::string, std::string>, std::vector<std::vector<std::uint64_t>>> edge_f;
  for (const auto& e : g.edges()) {
    auto& m = edge_f[e];
    m.assign(opts.domain_size, std::vector<std::uint64_t>(opts.domain_size));
    for (auto& row : m)
      for (auto& v : row) v = static_cast<std::uint64_t>(factor(rng));
  }

  std::vector<std::size_t> index_of(n);
  std::map<std::string, std::size_t> pos;
  for (std::size_t i = 0; i < n; ++i) pos[names[i]] = i;

  Relation r(name, g.vertices());
  std::vector<std::size_t> values(n, 0);
  relcore::Tuple tuple(n);
  while (true) {
    std::uint64_t count = 1;
    for (const auto& e : g.edges())
      count *= edge_f[e][values[pos[e.first]]][values[pos[e.second]]];
    for (std::size_t i = 0; i < n; ++i) tuple[i] = std::to_string(values[i]);
    r.add_row(tuple, count);
    std::size_t i = 0;
    for (; i < n; ++i) {
      if (++values[i] < opts.domain_size) break;
      values[i] = 0;
    }
    if (i == n) break;
  }
  return r;
}

std::optional<Relation> generate_pmap_instance(const UndirectedGraph& g, std::mt19937_64& rng,
                                               const FactorModelOptions& opts, int max_tries,
                                               const std::string& name) {
  for (int t = 0; t < max_tries; ++t) {
    Relation r = synthesize_factor_relation(g, rng, opts, name);
    RelationOracle oracle(r);
    if (verify_map(g, oracle, MapKind::p_map).holds) return r;
  }
  return std::nullopt;
}

UndirectedGraph random_connected_graph(const std::vector<AttributeId>& vertices,
                                       std::mt19937_64& rng, double extra_edge_prob) {
  AttributeSet vs(vertices);
  UndirectedGraph g(vs);
  const auto& names = vs.names();
  for (std::size_t i = 1; i < names.size(); ++i) {
    std::uniform_int_distribution<std::size_t> parent(0, i - 1);
    g.add_edge(names[parent(rng)], names[i]);
  }
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (std::size_t i = 0; i < names.size(); ++i) {
    for (std::size_t j = i + 1; j < names.size(); ++j) {
      if (!g.has_edge(names[i], names[j]) && coin(rng) < extra_edge_prob)
        g.add_edge(names[i], names[j]);
    }
  }
  return g;
}

}  // namespace ugm
