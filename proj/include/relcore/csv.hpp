#pragma once

#include <iosfwd>
#include <string>

#include "relcore/relation.hpp"

namespace relcore {

/// Reads a relation from CSV: first line is the attribute header, every
/// following line one tuple; duplicate lines are distinct bag elements.
Relation read_csv(std::istream& in, const std::string& name);
Relation read_csv_file(const std::string& path, const std::string& name);

/// Writes the relation with duplicates expanded and rows sorted, attributes
/// in schema (sorted) order. Round-trips with read_csv.
void write_csv(const Relation& r, std::ostream& out);

}  // namespace relcore
