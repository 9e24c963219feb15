#pragma once

#include <stdexcept>
#include <string>

namespace quadrics {

// Thrown when a computation would exceed a configured size bound.  Callers
// can raise the bound explicitly; the message carries the estimated cost.
class ResourceLimitError : public std::runtime_error {
public:
    explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace quadrics
