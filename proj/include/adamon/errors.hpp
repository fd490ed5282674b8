#pragma once

#include <stdexcept>
#include <string>

namespace adamon {

// Runtime numeric failure: zero denominator, non-finite state or input.
// Configuration/contract violations use std::invalid_argument instead.
class NumericError : public std::runtime_error {
 public:
  NumericError(std::string what, long iteration = -1)
      : std::runtime_error(std::move(what)), iteration_(iteration) {}

  // iteration index at which the failure occurred, -1 if not tied to a step
  long iteration() const { return iteration_; }

 private:
  long iteration_;
};

}  // namespace adamon
