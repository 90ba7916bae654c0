#pragma once

#include <stdexcept>

namespace powercol {

// Input exceeds a configured exact-computation limit. Callers map this to a
// distinct exit status so a refusal is never confused with a failure.
class LimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed graph file; message carries the offending line number.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A machine-checked internal claim failed. This is a bug in the toolkit and
// must surface loudly instead of being swallowed.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace powercol
