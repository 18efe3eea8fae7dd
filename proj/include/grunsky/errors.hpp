#pragma once

#include <sstream>
#include <stdexcept>
#include <string>

namespace grunsky {

// Error taxonomy mirrors the CLI exit-code contract:
//   ValidationError    -> exit 2 (bad inputs, domain violations, unreadable files)
//   ConvergenceError   -> exit 3 (a numerical procedure failed to converge/estimate)
//   InvariantViolation -> exit 4 (a hard internal invariant failed; indicates a bug
//                                 or data that contradicts the mathematical contract)
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvariantViolation : std::logic_error {
  using std::logic_error::logic_error;
};

namespace detail {

inline void str_append(std::ostringstream&) {}

template <class T, class... Rest>
void str_append(std::ostringstream& os, const T& value, const Rest&... rest) {
  os << value;
  str_append(os, rest...);
}

// Tiny message builder; gcc 11 has no std::format.
template <class... Parts>
std::string str(const Parts&... parts) {
  std::ostringstream os;
  str_append(os, parts...);
  return os.str();
}

}  // namespace detail

}  // namespace grunsky
