#pragma once
#include <stdexcept>
#include <string>

namespace vmc {

// Thrown when an operation's stated precondition is violated by the caller.
struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Thrown when an internal consistency check fails. The CLI maps this to exit code 3.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

inline void check_internal(bool cond, const std::string& msg) {
  if (!cond) throw InternalError(msg);
}

// Structural self-checks (measure progress, region trichotomy, flow cut sanity).
// On by default; benchmarks can switch them off.
bool& runtime_checks();

}  // namespace vmc
