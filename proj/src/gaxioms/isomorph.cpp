#include "gaxioms/isomorph.hpp"

#include <map>
#include <set>
#include <unordered_set>

#include "packed.hpp"
#include "relcore/errors.hpp"

namespace gaxioms {

using detail::Mask;
using detail::MaskUniverse;
using detail::PackedTriple;

std::string IsomorphViolation::describe() const {
  std::string out = std::string(axiom_name(axiom)) + ": given";
  for (const auto& p : premises) out += " [" + p.to_string() + "]";
  out += axiom == Axiom::transitivity ? ", neither of" : ", missing";
  for (const auto& m : missing) out += " [" + m.to_string() + "]";
  return out;
}

IsomorphReport check_graph_isomorph_axioms(const CISet& s, const ClosureBounds& bounds) {
  if (s.universe().size() > bounds.max_universe)
    throw relcore::resource_limit_error("universe of " + std::to_string(s.universe().size()) +
                                        " attributes exceeds the configured bound of " +
                                        std::to_string(bounds.max_universe));
  MaskUniverse uni(s.universe());
  Mask full = uni.to_mask(s.universe());

  std::map<std::string, std::vector<PackedTriple>> by_context;
  std::unordered_set<std::uint64_t> present;
  std::map<std::string, std::unordered_set<std::uint64_t>> present_by_context;
  for (const auto& st : s.statements()) {
    PackedTriple t = detail::make_triple(uni.to_mask(st.lhs_a()), uni.to_mask(st.cond()),
                                         uni.to_mask(st.lhs_b()));
    by_context[st.context()].push_back(t);
    present_by_context[st.context()].insert(detail::key_of(t));
  }

  IsomorphReport report;
  std::set<std::string> emitted;  // dedupe instances found via both orientations

  auto emit = [&](Axiom axiom, std::vector<CIStatement> premises,
                  std::vector<CIStatement> missing) {
    std::string key = std::string(axiom_name(axiom));
    for (const auto& p : premises) key += "|" + p.to_string();
    key += "=>";
    for (const auto& m : missing) key += "|" + m.to_string();
    if (emitted.insert(key).second)
      report.violations.push_back({axiom, std::move(premises), std::move(missing)});
  };

  for (const auto& [context, triples] : by_context) {
    const auto& keys = present_by_context[context];
    auto has = [&](Mask a, Mask z, Mask b) {
      return keys.count(detail::key_of(detail::make_triple(a, z, b))) > 0;
    };
    auto stmt = [&](Mask a, Mask z, Mask b) {
      PackedTriple t = detail::make_triple(a, z, b);
      return CIStatement(uni.to_set(t.x), uni.to_set(t.z), uni.to_set(t.y), context);
    };

    for (const PackedTriple& t : triples) {
      // Symmetry is built into the canonical form, nothing to check.

      // Decomposition: dropping one attribute from either side must stay in s.
      for (auto [a, b] : {std::pair{t.x, t.y}, std::pair{t.y, t.x}}) {
        for (std::size_t i = 0; i < uni.names.size(); ++i) {
          Mask w = Mask{1} << i;
          if (!(b & w) || b == w) continue;
          if (!has(a, t.z, b & ~w))
            emit(Axiom::decomposition, {stmt(t.x, t.z, t.y)}, {stmt(a, t.z, b & ~w)});
        }
      }

      // Intersection: this statement as (X, Z+W, Y); a present partner
      // (X, Z+Y, W) requires the conclusion (X, Z, Y+W).
      for (auto [a, b] : {std::pair{t.x, t.y}, std::pair{t.y, t.x}}) {
        detail::for_each_nonempty_submask(t.z, [&, a = a, b = b](Mask w) {
          Mask rest = t.z & ~w;
          if (has(a, rest | b, w) && !has(a, rest, b | w))
            emit(Axiom::intersection, {stmt(a, t.z, b), stmt(a, rest | b, w)},
                 {stmt(a, rest, b | w)});
        });
      }

      // Strong union: adding one attribute to the conditioning set.
      Mask others = full & ~(t.x | t.y | t.z);
      for (std::size_t i = 0; i < uni.names.size(); ++i) {
        Mask g = Mask{1} << i;
        if (!(others & g)) continue;
        if (!has(t.x, t.z | g, t.y))
          emit(Axiom::strong_union, {stmt(t.x, t.z, t.y)}, {stmt(t.x, t.z | g, t.y)});
      }

      // Transitivity: for every outside attribute, one branch must hold.
      for (std::size_t i = 0; i < uni.names.size(); ++i) {
        Mask g = Mask{1} << i;
        if (!(others & g)) continue;
        if (!has(t.x, t.z, g) && !has(g, t.z, t.y))
          emit(Axiom::transitivity, {stmt(t.x, t.z, t.y)},
               {stmt(t.x, t.z, g), stmt(g, t.z, t.y)});
      }
    }
  }
  return report;
}

}  // namespace gaxioms
