#pragma once

#include <stdexcept>
#include <string>

namespace pastlife {

/// Raised when a distribution spec string cannot be parsed.
class parse_error : public std::runtime_error {
  public:
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when an adaptive numerical routine fails to reach its tolerance.
class convergence_error : public std::runtime_error {
  public:
    explicit convergence_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace pastlife
