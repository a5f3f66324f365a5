#pragma once

#include <stdexcept>
#include <string>

namespace flatspec {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonOrthogonalGenerator : Error {
  using Error::Error;
};
struct ClosureBoundExceeded : Error {
  using Error::Error;
};
struct CocycleInconsistent : Error {
  using Error::Error;
};
struct NotDiagonalType : Error {
  using Error::Error;
};
struct IrrationalCharacterSum : Error {
  using Error::Error;
};
struct ZeroLength : Error {
  using Error::Error;
};
struct BoxTooSmall : Error {
  using Error::Error;
};
struct TailNotControlled : Error {
  using Error::Error;
};
struct ParseError : Error {
  using Error::Error;
};

}  // namespace flatspec
