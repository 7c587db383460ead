#pragma once

#include <stdexcept>
#include <string>

namespace qconf {

/// Thrown when an iterative numerical procedure fails to converge or a
/// linear solve breaks down.
class numerical_error : public std::runtime_error {
 public:
  explicit numerical_error(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown on malformed scenario configuration. Carries the offending line
/// number (0 when the problem is not tied to a single line).
class config_error : public std::runtime_error {
 public:
  config_error(int line, const std::string& what)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what
                                    : what),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_ = 0;
};

}  // namespace qconf
