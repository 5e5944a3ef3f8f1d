#pragma once

#include <stdexcept>
#include <string>

namespace aksara {

// Base class for all library errors. Subclasses carry the failure kind so
// callers can dispatch without parsing messages.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace aksara
