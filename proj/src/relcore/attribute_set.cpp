#include "relcore/attribute_set.hpp"

#include <algorithm>

#include "relcore/errors.hpp"

namespace relcore {

AttributeSet::AttributeSet(std::initializer_list<AttributeId> names)
    : AttributeSet(std::vector<AttributeId>(names)) {}

AttributeSet::AttributeSet(std::vector<AttributeId> names) : names_(std::move(names)) {
  for (const auto& n : names_) {
    if (n.empty()) throw argument_error("attribute name must be non-empty");
  }
  std::sort(names_.begin(), names_.end());
  names_.erase(std::unique(names_.begin(), names_.end()), names_.end());
}

bool AttributeSet::contains(const AttributeId& a) const {
  return std::binary_search(names_.begin(), names_.end(), a);
}

AttributeSet AttributeSet::set_union(const AttributeSet& o) const {
  std::vector<AttributeId> out;
  out.reserve(names_.size() + o.names_.size());
  std::set_union(names_.begin(), names_.end(), o.names_.begin(), o.names_.end(),
                 std::back_inserter(out));
  AttributeSet r;
  r.names_ = std::move(out);
  return r;
}

AttributeSet AttributeSet::set_intersection(const AttributeSet& o) const {
  std::vector<AttributeId> out;
  std::set_intersection(names_.begin(), names_.end(), o.names_.begin(), o.names_.end(),
                        std::back_inserter(out));
  AttributeSet r;
  r.names_ = std::move(out);
  return r;
}

AttributeSet AttributeSet::set_difference(const AttributeSet& o) const {
  std::vector<AttributeId> out;
  std::set_difference(names_.begin(), names_.end(), o.names_.begin(), o.names_.end(),
                      std::back_inserter(out));
  AttributeSet r;
  r.names_ = std::move(out);
  return r;
}

bool AttributeSet::subset_of(const AttributeSet& o) const {
  return std::includes(o.names_.begin(), o.names_.end(), names_.begin(), names_.end());
}

bool AttributeSet::disjoint_with(const AttributeSet& o) const {
  return set_intersection(o).empty();
}

std::string AttributeSet::to_string() const {
  if (names_.empty()) return "{}";
  std::string out;
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (i) out += ",";
    out += names_[i];
  }
  return out;
}

}  // namespace relcore
