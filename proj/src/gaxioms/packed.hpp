#pragma once

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gaxioms/ci_statement.hpp"
#include "relcore/errors.hpp"

namespace gaxioms::detail {

using Mask = std::uint32_t;

// Attribute universes are capped well below this; 3 masks pack into 64 bits.
inline constexpr std::size_t kMaxPackedUniverse = 20;

struct MaskUniverse {
  std::vector<std::string> names;  // sorted
  std::unordered_map<std::string, int> bit_of;

  explicit MaskUniverse(const AttributeSet& u) : names(u.names()) {
    if (names.size() > kMaxPackedUniverse)
      throw relcore::resource_limit_error("attribute universe of size " +
                                          std::to_string(names.size()) +
                                          " exceeds the packed limit of " +
                                          std::to_string(kMaxPackedUniverse));
    for (std::size_t i = 0; i < names.size(); ++i) bit_of[names[i]] = static_cast<int>(i);
  }

  Mask to_mask(const AttributeSet& s) const {
    Mask m = 0;
    for (const auto& a : s) {
      auto it = bit_of.find(a);
      if (it == bit_of.end())
        throw relcore::argument_error("attribute " + a + " not in universe");
      m |= Mask{1} << it->second;
    }
    return m;
  }

  AttributeSet to_set(Mask m) const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < names.size(); ++i)
      if (m & (Mask{1} << i)) out.push_back(names[i]);
    return AttributeSet(std::move(out));
  }
};

struct PackedTriple {
  Mask x, z, y;  // canonical: x < y numerically
};

inline PackedTriple make_triple(Mask x, Mask z, Mask y) {
  if (y < x) std::swap(x, y);
  return {x, z, y};
}

inline std::uint64_t key_of(const PackedTriple& t) {
  return (static_cast<std::uint64_t>(t.x) << 2 * kMaxPackedUniverse) |
         (static_cast<std::uint64_t>(t.z) << kMaxPackedUniverse) | t.y;
}

/// Visits every non-empty submask of m.
template <typename F>
void for_each_nonempty_submask(Mask m, F&& f) {
  for (Mask s = m; s != 0; s = (s - 1) & m) f(s);
}

}  // namespace gaxioms::detail
