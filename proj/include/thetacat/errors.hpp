#pragma once

#include <stdexcept>
#include <string>

namespace thetacat {

// Raised when a computation needs objects outside the configured size bounds.
class BoundExhausted : public std::runtime_error {
 public:
  explicit BoundExhausted(const std::string& what) : std::runtime_error(what) {}
};

class LevelMismatch : public std::invalid_argument {
 public:
  explicit LevelMismatch(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace thetacat
