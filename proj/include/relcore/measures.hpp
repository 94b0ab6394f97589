#pragma once

#include "relcore/relation.hpp"

namespace relcore {

/// Shannon measures in bits over the tuple-frequency distribution.
struct EntropyMeasures {
  double h_x = 0.0;        // H(X)
  double h_x_given_y = 0.0;  // H(X|Y)
  double mi_xy = 0.0;      // I(X,Y)
  double cmi_xy_given_z = 0.0;  // I(X,Y|Z)
};

/// Entropy of the attribute set x in r (bits).
double entropy(const Relation& r, const AttributeSet& x);

/// H(X|Y) = H(XY) - H(Y).
double conditional_entropy(const Relation& r, const AttributeSet& x, const AttributeSet& y);

/// I(X,Y) = H(X) + H(Y) - H(XY).
double mutual_information(const Relation& r, const AttributeSet& x, const AttributeSet& y);

/// I(X,Y|Z) = H(X|Z) - H(X|YZ).
double conditional_mutual_information(const Relation& r, const AttributeSet& x,
                                      const AttributeSet& y, const AttributeSet& z);

/// All four measures at once; throws distribution_error on an empty relation.
EntropyMeasures entropy_measures(const Relation& r, const AttributeSet& x,
                                 const AttributeSet& y, const AttributeSet& z);

/// Tolerance under which conditional mutual information is treated as zero.
inline constexpr double kEntropyTolerance = 1e-9;

}  // namespace relcore
