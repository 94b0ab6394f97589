#include "relcore/measures.hpp"

#include <cmath>
#include <unordered_map>

#include "relcore/errors.hpp"

namespace relcore {

namespace {

// H(X) = log2(N) - (sum c*log2 c) / N over the frequency table of X.
double entropy_over_columns(const Relation& r, const std::vector<std::size_t>& cols) {
  if (r.n_rows() == 0) throw distribution_error("entropy of an empty relation " + r.name());
  std::unordered_map<std::string, std::uint64_t> freq;
  for (std::size_t i = 0; i < r.tuples().size(); ++i)
    freq[pack_key(r.tuples()[i], cols)] += r.counts()[i];
  double weighted = 0.0;
  for (const auto& [k, c] : freq)
    weighted += static_cast<double>(c) * std::log2(static_cast<double>(c));
  double n = static_cast<double>(r.n_rows());
  return std::log2(n) - weighted / n;
}

}  // namespace

double entropy(const Relation& r, const AttributeSet& x) {
  return entropy_over_columns(r, r.column_indices(x));
}

double conditional_entropy(const Relation& r, const AttributeSet& x, const AttributeSet& y) {
  return entropy(r, x.set_union(y)) - entropy(r, y);
}

double mutual_information(const Relation& r, const AttributeSet& x, const AttributeSet& y) {
  return entropy(r, x) + entropy(r, y) - entropy(r, x.set_union(y));
}

double conditional_mutual_information(const Relation& r, const AttributeSet& x,
                                      const AttributeSet& y, const AttributeSet& z) {
  if (z.empty()) return mutual_information(r, x, y);
  return conditional_entropy(r, x, z) - conditional_entropy(r, x, y.set_union(z));
}

EntropyMeasures entropy_measures(const Relation& r, const AttributeSet& x,
                                 const AttributeSet& y, const AttributeSet& z) {
  if (r.n_rows() == 0)
    throw distribution_error("entropy measures of an empty relation " + r.name());
  EntropyMeasures m;
  m.h_x = entropy(r, x);
  m.h_x_given_y = conditional_entropy(r, x, y);
  m.mi_xy = mutual_information(r, x, y);
  m.cmi_xy_given_z = conditional_mutual_information(r, x, y, z);
  return m;
}

}  // namespace relcore
