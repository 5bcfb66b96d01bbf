#pragma once

#include <stdexcept>
#include <string>

namespace uavtrack {

// Bad user input: malformed config, unknown policy id, invalid arguments.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Numeric failure at runtime: filter divergence, non-finite losses.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

// Unreadable or inconsistent checkpoint file.
class CheckpointError : public std::runtime_error {
 public:
  explicit CheckpointError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace uavtrack
