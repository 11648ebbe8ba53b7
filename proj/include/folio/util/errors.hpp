#pragma once

#include <stdexcept>
#include <string>

namespace folio {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad bytes: malformed archives, corrupt files, unparsable records.
struct DataError : Error {
  using Error::Error;
};

// Caller violated a documented precondition.
struct PreconditionError : Error {
  using Error::Error;
};

// Filesystem / storage failures.
struct IoError : Error {
  using Error::Error;
};

}  // namespace folio
