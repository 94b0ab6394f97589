#include "relcore/relation.hpp"

#include <algorithm>

#include "relcore/errors.hpp"

namespace relcore {

namespace {
constexpr char kSep = '\x1f';
}

std::string pack_key(const Tuple& row, const std::vector<std::size_t>& cols) {
  std::string key;
  for (std::size_t c : cols) {
    key += row[c];
    key += kSep;
  }
  return key;
}

Assignment::Assignment(std::initializer_list<std::pair<AttributeId, Value>> bindings) {
  for (const auto& [a, v] : bindings) bind(a, v);
}

void Assignment::bind(const AttributeId& a, const Value& v) {
  if (a.empty()) throw argument_error("attribute name must be non-empty");
  auto it = std::lower_bound(bindings_.begin(), bindings_.end(), a,
                             [](const auto& p, const AttributeId& key) { return p.first < key; });
  if (it != bindings_.end() && it->first == a) {
    if (it->second != v)
      throw argument_error("attribute " + a + " bound to two different values");
    return;
  }
  bindings_.insert(it, {a, v});
}

bool Assignment::binds(const AttributeId& a) const { return value_of(a) != nullptr; }

const Value* Assignment::value_of(const AttributeId& a) const {
  auto it = std::lower_bound(bindings_.begin(), bindings_.end(), a,
                             [](const auto& p, const AttributeId& key) { return p.first < key; });
  if (it != bindings_.end() && it->first == a) return &it->second;
  return nullptr;
}

AttributeSet Assignment::attributes() const {
  std::vector<AttributeId> names;
  names.reserve(bindings_.size());
  for (const auto& [a, v] : bindings_) names.push_back(a);
  return AttributeSet(std::move(names));
}

Assignment Assignment::merged_with(const Assignment& o) const {
  Assignment out = *this;
  for (const auto& [a, v] : o.bindings_) out.bind(a, v);
  return out;
}

Relation::Relation(std::string name, AttributeSet schema)
    : name_(std::move(name)), schema_(std::move(schema)) {
  base_names_ = {name_};
}

Relation Relation::from_rows(std::string name, AttributeSet schema,
                             const std::vector<Tuple>& rows) {
  Relation r(std::move(name), std::move(schema));
  for (const auto& row : rows) r.add_row(row);
  return r;
}

std::size_t Relation::find_or_insert(const Tuple& row) {
  std::vector<std::size_t> all(schema_.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  auto [it, inserted] = lookup_.try_emplace(pack_key(row, all), tuples_.size());
  if (inserted) {
    tuples_.push_back(row);
    counts_.push_back(0);
  }
  return it->second;
}

void Relation::add_row(const Tuple& row, std::uint64_t count) {
  if (row.size() != schema_.size())
    throw schema_error("row arity " + std::to_string(row.size()) + " does not match schema " +
                       schema_.to_string());
  if (count == 0) return;
  std::size_t slot = find_or_insert(row);
  counts_[slot] += count;
  total_ += count;
}

void Relation::add_row(const Assignment& row, std::uint64_t count) {
  if (row.attributes() != schema_)
    throw schema_error("assignment attributes " + row.attributes().to_string() +
                       " do not match schema " + schema_.to_string());
  Tuple t;
  t.reserve(schema_.size());
  for (const auto& a : schema_) t.push_back(*row.value_of(a));
  add_row(t, count);
}

std::vector<Tuple> Relation::expanded_rows() const {
  std::vector<Tuple> out;
  out.reserve(total_);
  for (std::size_t i = 0; i < tuples_.size(); ++i) {
    for (std::uint64_t k = 0; k < counts_[i]; ++k) out.push_back(tuples_[i]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t Relation::column_index(const AttributeId& a) const {
  const auto& names = schema_.names();
  auto it = std::lower_bound(names.begin(), names.end(), a);
  if (it == names.end() || *it != a)
    throw schema_error("attribute " + a + " not in schema of " + name_);
  return static_cast<std::size_t>(it - names.begin());
}

std::vector<std::size_t> Relation::column_indices(const AttributeSet& attrs) const {
  std::vector<std::size_t> out;
  out.reserve(attrs.size());
  for (const auto& a : attrs) out.push_back(column_index(a));
  return out;
}

void Relation::set_provenance(std::vector<std::string> base_names, AttributeSet join_attrs) {
  base_names_ = std::move(base_names);
  join_attrs_used_ = std::move(join_attrs);
}

Relation natural_join(const Relation& r, const Relation& s) {
  AttributeSet common = r.schema().set_intersection(s.schema());
  AttributeSet out_schema = r.schema().set_union(s.schema());
  Relation out(r.name() + "*" + s.name(), out_schema);

  const auto r_common = r.column_indices(common);
  const auto s_common = s.column_indices(common);

  // Bucket the right side by join-attribute values.
  std::unordered_map<std::string, std::vector<std::size_t>> buckets;
  for (std::size_t j = 0; j < s.tuples().size(); ++j)
    buckets[pack_key(s.tuples()[j], s_common)].push_back(j);

  // Output column -> source column.
  std::vector<std::pair<bool, std::size_t>> source;  // (from_r, index)
  for (const auto& a : out_schema) {
    if (r.schema().contains(a))
      source.emplace_back(true, r.column_index(a));
    else
      source.emplace_back(false, s.column_index(a));
  }

  Tuple merged(out_schema.size());
  for (std::size_t i = 0; i < r.tuples().size(); ++i) {
    auto it = buckets.find(pack_key(r.tuples()[i], r_common));
    if (it == buckets.end()) continue;
    for (std::size_t j : it->second) {
      for (std::size_t c = 0; c < source.size(); ++c) {
        const auto& [from_r, idx] = source[c];
        merged[c] = from_r ? r.tuples()[i][idx] : s.tuples()[j][idx];
      }
      out.add_row(merged, r.counts()[i] * s.counts()[j]);
    }
  }

  std::vector<std::string> provenance = r.base_names();
  provenance.insert(provenance.end(), s.base_names().begin(), s.base_names().end());
  out.set_provenance(std::move(provenance), r.join_attrs_used()
                                                .set_union(s.join_attrs_used())
                                                .set_union(common));
  return out;
}

Relation project(const Relation& r, const AttributeSet& attrs) {
  if (!attrs.subset_of(r.schema()))
    throw schema_error("projection attributes " + attrs.to_string() +
                       " not contained in schema of " + r.name());
  Relation out(r.name(), attrs);
  const auto cols = r.column_indices(attrs);
  Tuple t(cols.size());
  for (std::size_t i = 0; i < r.tuples().size(); ++i) {
    for (std::size_t c = 0; c < cols.size(); ++c) t[c] = r.tuples()[i][cols[c]];
    out.add_row(t, r.counts()[i]);
  }
  out.set_provenance(r.base_names(), r.join_attrs_used());
  return out;
}

std::uint64_t count(const Relation& r, const Assignment& a) {
  std::vector<std::pair<std::size_t, const Value*>> tests;
  tests.reserve(a.size());
  for (const auto& [attr, value] : a.bindings())
    tests.emplace_back(r.column_index(attr), &value);

  std::uint64_t total = 0;
  for (std::size_t i = 0; i < r.tuples().size(); ++i) {
    bool match = true;
    for (const auto& [col, value] : tests) {
      if (r.tuples()[i][col] != *value) {
        match = false;
        break;
      }
    }
    if (match) total += r.counts()[i];
  }
  return total;
}

Rational probability(const Relation& r, const Assignment& target, const Assignment& given) {
  if (!target.attributes().disjoint_with(given.attributes()))
    throw argument_error("target and conditioning assignments overlap");
  std::uint64_t denom = count(r, given);
  if (denom == 0)
    throw distribution_error("conditioning on an event with zero support in " + r.name());
  std::uint64_t numer = count(r, target.merged_with(given));
  return make_ratio(numer, denom);
}

bool empirical_ci(const Relation& r, const AttributeSet& x, const AttributeSet& y,
                  const AttributeSet& z) {
  if (x.empty() || y.empty()) throw argument_error("independence sides must be non-empty");
  if (!x.disjoint_with(y) || !x.disjoint_with(z) || !y.disjoint_with(z))
    throw argument_error("independence arguments must be mutually disjoint");
  const auto xc = r.column_indices(x);
  const auto yc = r.column_indices(y);
  const auto zc = r.column_indices(z);

  struct Group {
    std::unordered_map<std::string, std::uint64_t> x_counts;
    std::unordered_map<std::string, std::uint64_t> y_counts;
    std::unordered_map<std::string, std::uint64_t> xy_counts;
    std::uint64_t total = 0;
  };
  std::unordered_map<std::string, Group> groups;

  for (std::size_t i = 0; i < r.tuples().size(); ++i) {
    const Tuple& t = r.tuples()[i];
    std::uint64_t c = r.counts()[i];
    Group& g = groups[pack_key(t, zc)];
    std::string xk = pack_key(t, xc);
    std::string yk = pack_key(t, yc);
    g.x_counts[xk] += c;
    g.y_counts[yk] += c;
    g.xy_counts[xk + yk] += c;
    g.total += c;
  }

  // N_xyz * N_z == N_xz * N_yz for every value combination with support;
  // combinations where x or y never co-occurs with z are identically 0 == 0.
  for (const auto& [zk, g] : groups) {
    for (const auto& [xk, cx] : g.x_counts) {
      for (const auto& [yk, cy] : g.y_counts) {
        auto it = g.xy_counts.find(xk + yk);
        std::uint64_t cxy = it == g.xy_counts.end() ? 0 : it->second;
        if (static_cast<unsigned __int128>(cxy) * g.total !=
            static_cast<unsigned __int128>(cx) * cy)
          return false;
      }
    }
  }
  return true;
}

bool functional_dependency_holds(const Relation& r, const AttributeSet& x,
                                 const AttributeSet& y) {
  const auto xc = r.column_indices(x);
  const auto yc = r.column_indices(y);
  std::unordered_map<std::string, std::string> seen;
  for (const auto& t : r.tuples()) {
    std::string xk = pack_key(t, xc);
    std::string yk = pack_key(t, yc);
    auto [it, inserted] = seen.try_emplace(std::move(xk), yk);
    if (!inserted && it->second != yk) return false;
  }
  return true;
}

bool is_key(const Relation& r, const AttributeSet& attrs) {
  const auto cols = r.column_indices(attrs);
  std::unordered_map<std::string, std::uint64_t> counts;
  for (std::size_t i = 0; i < r.tuples().size(); ++i)
    counts[pack_key(r.tuples()[i], cols)] += r.counts()[i];
  for (const auto& [k, c] : counts)
    if (c > 1) return false;
  return true;
}

bool validate_foreign_key(const Relation& referencing, const Relation& referenced,
                          const AttributeSet& attrs) {
  if (!attrs.subset_of(referencing.schema()) || !attrs.subset_of(referenced.schema()))
    throw schema_error("foreign-key attributes " + attrs.to_string() +
                       " must appear in both relations");
  if (!is_key(referenced, attrs)) return false;
  const auto ref_cols = referenced.column_indices(attrs);
  std::unordered_map<std::string, bool> keys;
  for (const auto& t : referenced.tuples()) keys[pack_key(t, ref_cols)] = true;
  const auto src_cols = referencing.column_indices(attrs);
  for (const auto& t : referencing.tuples()) {
    if (!keys.count(pack_key(t, src_cols))) return false;
  }
  return true;
}

}  // namespace relcore
