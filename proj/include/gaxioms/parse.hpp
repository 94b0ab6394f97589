#pragma once

#include <string>
#include <vector>

#include "gaxioms/ci_statement.hpp"

namespace gaxioms {

/// Parses one assertion of the form
///   X1,X2 _|_ Y1 | Z1,Z2 @ RelName
/// with "|-" for an empty conditioning set and "@JOIN" for the joined
/// relation. Overlapping sets are rejected.
CIStatement parse_ci_line(const std::string& line);

/// Parses a whole assertion file; '#' starts a comment, blank lines are
/// skipped. Lines containing "->>": the caller decides (EMVD assertions are
/// parsed by the join-propagation module).
std::vector<CIStatement> parse_ci_lines(const std::string& text);

/// Renders in the grammar accepted by parse_ci_line.
std::string format_ci(const CIStatement& s);

}  // namespace gaxioms
