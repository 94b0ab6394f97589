#include "gaxioms/closure.hpp"

#include <algorithm>
#include <map>

#include "packed.hpp"
#include "relcore/errors.hpp"

namespace gaxioms {

using detail::Mask;
using detail::MaskUniverse;
using detail::PackedTriple;
using relcore::resource_limit_error;

const char* axiom_name(Axiom a) {
  switch (a) {
    case Axiom::symmetry: return "symmetry";
    case Axiom::decomposition: return "decomposition";
    case Axiom::weak_union: return "weak_union";
    case Axiom::contraction: return "contraction";
    case Axiom::intersection: return "intersection";
    case Axiom::strong_union: return "strong_union";
    case Axiom::transitivity: return "transitivity";
  }
  return "?";
}

namespace {

void check_universe_bound(const AttributeSet& universe, const ClosureBounds& bounds) {
  if (universe.size() > bounds.max_universe)
    throw resource_limit_error("universe of " + std::to_string(universe.size()) +
                               " attributes exceeds the configured bound of " +
                               std::to_string(bounds.max_universe));
}

/// Worklist fixed point over packed triples of one context.
class ClosureEngine {
 public:
  ClosureEngine(const MaskUniverse& uni, bool graphoid, std::size_t cap)
      : uni_(uni), graphoid_(graphoid), cap_(cap) {}

  struct Entry {
    PackedTriple t;
    int axiom;  // -1 for base statements
    int p1 = -1, p2 = -1;
  };

  void add_base(const PackedTriple& t) { add(t, -1, -1, -1); }

  void run() {
    for (std::size_t i = 0; i < entries_.size(); ++i) process(static_cast<int>(i));
  }

  const std::vector<Entry>& entries() const { return entries_; }

  int find(const PackedTriple& t) const {
    auto it = index_.find(detail::key_of(t));
    return it == index_.end() ? -1 : it->second;
  }

 private:
  bool add(const PackedTriple& t, int axiom, int p1, int p2) {
    auto [it, inserted] = index_.try_emplace(detail::key_of(t), static_cast<int>(entries_.size()));
    if (!inserted) return false;
    if (entries_.size() >= cap_)
      throw resource_limit_error("closure exceeded the configured cap of " +
                                 std::to_string(cap_) + " statements");
    entries_.push_back({t, axiom, p1, p2});
    by_side_[t.x].push_back(it->second);
    if (t.y != t.x) by_side_[t.y].push_back(it->second);
    return true;
  }

  void process(int id) {
    PackedTriple t = entries_[id].t;
    apply_oriented(id, t.x, t.z, t.y);
    apply_oriented(id, t.y, t.z, t.x);
  }

  // One orientation (a _|_ b | z) of entry `id`.
  void apply_oriented(int id, Mask a, Mask z, Mask b) {
    // decomposition: a _|_ b' | z for non-empty proper b' of b.
    detail::for_each_nonempty_submask(b, [&](Mask sub) {
      if (sub == b) return;
      add(detail::make_triple(a, z, sub), static_cast<int>(Axiom::decomposition), id, -1);
    });
    // weak union: a _|_ b\w | z+w.
    detail::for_each_nonempty_submask(b, [&](Mask w) {
      if (w == b) return;
      add(detail::make_triple(a, z | w, b & ~w), static_cast<int>(Axiom::weak_union), id, -1);
    });
    // contraction with this statement as (X,Z,Y): find partners (X, Z+Y, W).
    {
      auto it = by_side_.find(a);
      if (it != by_side_.end()) {
        // The bucket may grow while we conclude; conclusions are re-processed
        // later anyway, so iterate over the snapshot length.
        std::size_t n = it->second.size();
        for (std::size_t k = 0; k < n; ++k) {
          int j = it->second[k];
          const PackedTriple& q = entries_[j].t;
          Mask other = q.x == a ? q.y : q.x;
          if ((q.x == a || q.y == a) && q.z == (z | b))
            add(detail::make_triple(a, z, b | other), static_cast<int>(Axiom::contraction), id, j);
        }
      }
    }
    // contraction with this statement as (X, Z+Y, W): premise1 = (X, Z, Y)
    // for every split of the conditioning set.
    detail::for_each_nonempty_submask(z, [&](Mask y1) {
      int j = find(detail::make_triple(a, z & ~y1, y1));
      if (j >= 0)
        add(detail::make_triple(a, z & ~y1, y1 | b), static_cast<int>(Axiom::contraction), j, id);
    });
    if (graphoid_) {
      // intersection: this statement as (X, Z+W, Y); partner (X, Z+Y, W).
      detail::for_each_nonempty_submask(z, [&](Mask w) {
        Mask rest = z & ~w;
        int j = find(detail::make_triple(a, rest | b, w));
        if (j >= 0)
          add(detail::make_triple(a, rest, b | w), static_cast<int>(Axiom::intersection), id, j);
      });
    }
  }

  const MaskUniverse& uni_;
  bool graphoid_;
  std::size_t cap_;
  std::vector<Entry> entries_;
  std::unordered_map<std::uint64_t, int> index_;
  std::unordered_map<Mask, std::vector<int>> by_side_;
};

CIStatement to_statement(const MaskUniverse& uni, const PackedTriple& t,
                         const std::string& context) {
  return CIStatement(uni.to_set(t.x), uni.to_set(t.z), uni.to_set(t.y), context);
}

std::map<std::string, std::vector<const CIStatement*>> group_by_context(const CISet& base) {
  std::map<std::string, std::vector<const CIStatement*>> groups;
  for (const auto& s : base.statements()) groups[s.context()].push_back(&s);
  return groups;
}

}  // namespace

AxiomApplication apply_axiom(Axiom axiom, const std::vector<CIStatement>& premises,
                             const AttributeSet& universe) {
  AxiomApplication result;
  MaskUniverse uni(universe);

  auto push = [&](Mask a, Mask z, Mask b, const std::string& ctx) {
    if (a == 0 || b == 0) return;
    CIStatement s = to_statement(uni, detail::make_triple(a, z, b), ctx);
    if (std::find(result.conclusions.begin(), result.conclusions.end(), s) ==
        result.conclusions.end())
      result.conclusions.push_back(s);
  };

  if (premises.empty()) return result;
  const CIStatement& p = premises[0];
  Mask px = uni.to_mask(p.lhs_a());
  Mask pz = uni.to_mask(p.cond());
  Mask py = uni.to_mask(p.lhs_b());
  const std::string& ctx = p.context();

  switch (axiom) {
    case Axiom::symmetry: {
      if (premises.size() != 1) return result;
      result.applicable = true;
      push(py, pz, px, ctx);  // canonicalization makes this the same statement
      return result;
    }
    case Axiom::decomposition: {
      if (premises.size() != 1) return result;
      for (auto [a, b] : {std::pair{px, py}, std::pair{py, px}}) {
        detail::for_each_nonempty_submask(b, [&](Mask sub) {
          if (sub != b) {
            result.applicable = true;
            push(a, pz, sub, ctx);
          }
        });
      }
      return result;
    }
    case Axiom::weak_union: {
      if (premises.size() != 1) return result;
      for (auto [a, b] : {std::pair{px, py}, std::pair{py, px}}) {
        detail::for_each_nonempty_submask(b, [&](Mask w) {
          if (w != b) {
            result.applicable = true;
            push(a, pz | w, b & ~w, ctx);
          }
        });
      }
      return result;
    }
    case Axiom::contraction: {
      if (premises.size() != 2 || premises[1].context() != ctx) return result;
      Mask qx = uni.to_mask(premises[1].lhs_a());
      Mask qz = uni.to_mask(premises[1].cond());
      Mask qy = uni.to_mask(premises[1].lhs_b());
      // (X,Z,Y) and (X,Z+Y,W) => (X,Z,Y+W), trying both orientations of each.
      for (auto [a, b] : {std::pair{px, py}, std::pair{py, px}}) {
        for (auto [c, w] : {std::pair{qx, qy}, std::pair{qy, qx}}) {
          if (c == a && qz == (pz | b) && (w & (a | pz | b)) == 0) {
            result.applicable = true;
            push(a, pz, b | w, ctx);
          }
        }
      }
      return result;
    }
    case Axiom::intersection: {
      if (premises.size() != 2 || premises[1].context() != ctx) return result;
      Mask qx = uni.to_mask(premises[1].lhs_a());
      Mask qz = uni.to_mask(premises[1].cond());
      Mask qy = uni.to_mask(premises[1].lhs_b());
      // (X,Z+W,Y) and (X,Z+Y,W) => (X,Z,Y+W).
      for (auto [a, b] : {std::pair{px, py}, std::pair{py, px}}) {
        for (auto [c, w] : {std::pair{qx, qy}, std::pair{qy, qx}}) {
          if (c != a || (w & pz) != w) continue;
          Mask rest = pz & ~w;
          if (qz == (rest | b)) {
            result.applicable = true;
            push(a, rest, b | w, ctx);
          }
        }
      }
      return result;
    }
    case Axiom::strong_union: {
      if (premises.size() != 1) return result;
      Mask others = uni.to_mask(universe) & ~(px | pz | py);
      detail::for_each_nonempty_submask(others, [&](Mask w) {
        result.applicable = true;
        push(px, pz | w, py, ctx);
      });
      return result;
    }
    case Axiom::transitivity: {
      if (premises.size() != 1) return result;
      Mask others = uni.to_mask(universe) & ~(px | pz | py);
      for (std::size_t i = 0; i < uni.names.size(); ++i) {
        Mask g = Mask{1} << i;
        if (!(others & g)) continue;
        result.applicable = true;
        result.branches.emplace_back(to_statement(uni, detail::make_triple(px, pz, g), ctx),
                                     to_statement(uni, detail::make_triple(g, pz, py), ctx));
      }
      return result;
    }
  }
  return result;
}

CISet closure(const CISet& base, ClosureMode mode, const ClosureBounds& bounds) {
  check_universe_bound(base.universe(), bounds);
  MaskUniverse uni(base.universe());
  CISet out(base.universe());
  for (const auto& [context, stmts] : group_by_context(base)) {
    ClosureEngine engine(uni, mode == ClosureMode::graphoid, bounds.max_statements);
    for (const CIStatement* s : stmts)
      engine.add_base(detail::make_triple(uni.to_mask(s->lhs_a()), uni.to_mask(s->cond()),
                                          uni.to_mask(s->lhs_b())));
    engine.run();
    for (const auto& e : engine.entries()) out.insert(to_statement(uni, e.t, context));
  }
  return out;
}

std::pair<bool, std::optional<DerivationTrace>> derivable(const CISet& base,
                                                          const CIStatement& goal,
                                                          ClosureMode mode,
                                                          const ClosureBounds& bounds) {
  check_universe_bound(base.universe(), bounds);
  MaskUniverse uni(base.universe());
  auto groups = group_by_context(base);
  auto git = groups.find(goal.context());
  if (git == groups.end()) return {false, std::nullopt};

  ClosureEngine engine(uni, mode == ClosureMode::graphoid, bounds.max_statements);
  for (const CIStatement* s : git->second)
    engine.add_base(detail::make_triple(uni.to_mask(s->lhs_a()), uni.to_mask(s->cond()),
                                        uni.to_mask(s->lhs_b())));
  engine.run();

  int goal_id = engine.find(detail::make_triple(
      uni.to_mask(goal.lhs_a()), uni.to_mask(goal.cond()), uni.to_mask(goal.lhs_b())));
  if (goal_id < 0) return {false, std::nullopt};

  // Collect the derivation cone of the goal; parents always precede children.
  std::vector<int> needed{goal_id};
  std::vector<bool> seen(engine.entries().size(), false);
  seen[goal_id] = true;
  for (std::size_t k = 0; k < needed.size(); ++k) {
    const auto& e = engine.entries()[needed[k]];
    for (int p : {e.p1, e.p2}) {
      if (p >= 0 && !seen[p]) {
        seen[p] = true;
        needed.push_back(p);
      }
    }
  }
  std::sort(needed.begin(), needed.end());

  DerivationTrace trace;
  for (int id : needed) {
    const auto& e = engine.entries()[id];
    if (e.axiom < 0) continue;  // base statement
    std::vector<CIStatement> inputs;
    for (int p : {e.p1, e.p2})
      if (p >= 0) inputs.push_back(to_statement(uni, engine.entries()[p].t, goal.context()));
    trace.steps.push_back(DerivationStep{static_cast<Axiom>(e.axiom), std::move(inputs),
                                         to_statement(uni, e.t, goal.context())});
  }
  return {true, trace};
}

}  // namespace gaxioms
