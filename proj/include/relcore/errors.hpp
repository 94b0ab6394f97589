#pragma once

#include <stdexcept>
#include <string>

namespace relcore {

// Attribute sets / bindings that do not fit the relation schema.
struct schema_error : std::runtime_error {
  explicit schema_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Ill-formed arguments (overlapping sets, empty sides, unknown vertices).
struct argument_error : std::runtime_error {
  explicit argument_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Conditioning on an event with zero support, empty distributions.
struct distribution_error : std::runtime_error {
  explicit distribution_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct parse_error : std::runtime_error {
  explicit parse_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A configured bound (universe size, closure cap) was exceeded.
struct resource_limit_error : std::runtime_error {
  explicit resource_limit_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Structural preconditions of an operation (connectivity, single join
// attribute, valid match groups) do not hold.
struct precondition_error : std::runtime_error {
  explicit precondition_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace relcore
