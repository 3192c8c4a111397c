#ifndef CHERN_ERRORS_HPP
#define CHERN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace chern {

// Error taxonomy mirrors the CLI exit codes: input errors exit 2,
// instability/genericity failures exit 3. A failed mathematical check is
// never an exception; it is a "fail" verdict in a report.

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A computation that could not certify its result (fit did not stabilize,
// saturation bound hit, ...). Distinct from a falsified check.
class UnstableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Randomized search exhausted its trial budget. Suggested remedy is a
// larger coefficient field or more trials, not a mathematical conclusion.
class GenericityError : public UnstableError {
 public:
  using UnstableError::UnstableError;
};

class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace chern

#endif
