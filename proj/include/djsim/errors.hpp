#pragma once

#include <stdexcept>
#include <string>

namespace djsim {

/// Register, table, or enumeration size outside the supported range.
class SizeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Gate dimension does not match the number of target qubits.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DuplicateTargetError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Qubit or basis index past the end of the register.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// The function table is neither constant nor balanced.
class PromiseViolation : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed oracle bit string, cable string, or wiring letter.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Matrix or amplitude data failing a numerical invariant.
class NumericError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace djsim
