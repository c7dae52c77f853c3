#pragma once

#include <stdexcept>
#include <string>

namespace evomerge {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// bad user-supplied configuration (file or programmatic)
struct ConfigError : Error {
  using Error::Error;
};

// bad argument shape/length/value at an API boundary
struct ArgumentError : Error {
  using Error::Error;
};

// genome/assignment length or index mismatch
struct EncodingError : Error {
  using Error::Error;
};

// operation called in a state that does not allow it
struct StateError : Error {
  using Error::Error;
};

// unreadable or version-incompatible serialized data
struct FormatError : Error {
  using Error::Error;
};

}  // namespace evomerge
