#pragma once

#include <stdexcept>
#include <string>

namespace qbinom {

// Arithmetic left the 64-bit signed range. Always raised, never wrapped:
// a silently wrapped coefficient would corrupt every identity downstream.
class OverflowError : public std::overflow_error {
 public:
  explicit OverflowError(const std::string& what) : std::overflow_error(what) {}
};

// An enumeration grew past its configured cap.
class CapExceededError : public std::runtime_error {
 public:
  CapExceededError(const std::string& what, long long reached)
      : std::runtime_error(what), count_reached(reached) {}

  long long count_reached;
};

// Poset input rejected: cycle, declared pair that is not a cover, bad
// element index, or a malformed file.
class PosetError : public std::invalid_argument {
 public:
  explicit PosetError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace qbinom
