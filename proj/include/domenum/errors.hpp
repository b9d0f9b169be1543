#ifndef DOMENUM_ERRORS_HPP
#define DOMENUM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace domenum {

/// Malformed or out-of-range input (bad edge, bad file, bad clique tree).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an operation that requires a chordal graph receives a non-chordal one.
class NotChordalError : public std::runtime_error {
 public:
  NotChordalError() : std::runtime_error("graph is not chordal") {}
  using std::runtime_error::runtime_error;
};

/// A caller broke a documented precondition.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace domenum

#endif  // DOMENUM_ERRORS_HPP
