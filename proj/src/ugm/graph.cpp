#include "ugm/graph.hpp"

#include <algorithm>
#include <queue>

#include <nlohmann/json.hpp>

#include "relcore/errors.hpp"

namespace ugm {

using relcore::argument_error;
using relcore::parse_error;
using json = nlohmann::json;

void UndirectedGraph::add_edge(const AttributeId& a, const AttributeId& b) {
  if (!vertices_.contains(a) || !vertices_.contains(b))
    throw argument_error("edge endpoint not a declared vertex: " + a + "-" + b);
  if (a == b) throw argument_error("self-loop on vertex " + a);
  auto e = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) edges_.insert(it, e);
}

bool UndirectedGraph::has_edge(const AttributeId& a, const AttributeId& b) const {
  auto e = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

std::vector<AttributeId> UndirectedGraph::neighbors(const AttributeId& v) const {
  std::vector<AttributeId> out;
  for (const auto& [a, b] : edges_) {
    if (a == v) out.push_back(b);
    else if (b == v) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool UndirectedGraph::connected() const {
  if (vertices_.empty()) return true;
  std::vector<AttributeId> stack{vertices_.names().front()};
  AttributeSet seen({stack.front()});
  while (!stack.empty()) {
    AttributeId v = stack.back();
    stack.pop_back();
    for (const auto& n : neighbors(v)) {
      if (!seen.contains(n)) {
        seen = seen.set_union(AttributeSet::single(n));
        stack.push_back(n);
      }
    }
  }
  return seen.size() == vertices_.size();
}

UndirectedGraph UndirectedGraph::chain(const std::vector<AttributeId>& vertices) {
  UndirectedGraph g((AttributeSet(vertices)));
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i) g.add_edge(vertices[i], vertices[i + 1]);
  return g;
}

bool separated(const UndirectedGraph& g, const AttributeSet& x, const AttributeSet& y,
               const AttributeSet& z) {
  if (x.empty() || y.empty()) throw argument_error("separation sides must be non-empty");
  if (!x.disjoint_with(y) || !x.disjoint_with(z) || !y.disjoint_with(z))
    throw argument_error("separation arguments must be mutually disjoint");
  for (const auto& s : {x, y, z}) {
    if (!s.subset_of(g.vertices()))
      throw argument_error("unknown vertex among " + s.to_string());
  }
  // Reachability from x with z removed.
  std::vector<AttributeId> stack(x.begin(), x.end());
  AttributeSet seen = x;
  while (!stack.empty()) {
    AttributeId v = stack.back();
    stack.pop_back();
    for (const auto& n : g.neighbors(v)) {
      if (z.contains(n) || seen.contains(n)) continue;
      if (y.contains(n)) return false;
      seen = seen.set_union(AttributeSet::single(n));
      stack.push_back(n);
    }
  }
  return true;
}

std::string to_dot(const UndirectedGraph& g) {
  std::string out = "graph {\n";
  for (const auto& v : g.vertices()) out += "  \"" + v + "\";\n";
  for (const auto& [a, b] : g.edges()) out += "  \"" + a + "\" -- \"" + b + "\";\n";
  out += "}\n";
  return out;
}

UndirectedGraph graph_union(const UndirectedGraph& g1, const UndirectedGraph& g2) {
  UndirectedGraph g(g1.vertices().set_union(g2.vertices()));
  for (const auto& [a, b] : g1.edges()) g.add_edge(a, b);
  for (const auto& [a, b] : g2.edges()) g.add_edge(a, b);
  return g;
}

UndirectedGraph graph_from_json(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw parse_error(std::string("invalid graph JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array())
    throw parse_error("graph JSON must contain a \"vertices\" array");
  std::vector<std::string> vertices;
  for (const auto& v : j["vertices"]) {
    if (!v.is_string()) throw parse_error("graph vertices must be strings");
    vertices.push_back(v.get<std::string>());
  }
  UndirectedGraph g((AttributeSet(vertices)));
  if (j.contains("edges")) {
    for (const auto& e : j["edges"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
        throw parse_error("graph edges must be [\"A\",\"B\"] pairs");
      try {
        g.add_edge(e[0].get<std::string>(), e[1].get<std::string>());
      } catch (const argument_error& err) {
        throw parse_error(err.what());
      }
    }
  }
  return g;
}

std::string graph_to_json(const UndirectedGraph& g) {
  json j;
  j["vertices"] = g.vertices().names();
  j["edges"] = json::array();
  for (const auto& [a, b] : g.edges()) j["edges"].push_back({a, b});
  return j.dump();
}

}  // namespace ugm
