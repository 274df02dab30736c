#ifndef BSCHUR_COMMON_HPP
#define BSCHUR_COMMON_HPP

#include <stdexcept>
#include <string>

namespace bschur {

// Precondition / input violations: CLI maps these to exit code 2.
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Guarded size-bound violations (cost cliffs): CLI maps these to exit code 3.
struct BoundError : std::runtime_error {
  explicit BoundError(const std::string& what) : std::runtime_error(what) {}
};

// Internal consistency failures that should be impossible on valid input.
struct InternalError : std::logic_error {
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace bschur

#endif
