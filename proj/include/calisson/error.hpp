#pragma once

#include <stdexcept>
#include <string>

namespace calisson {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed region, tiling, height or partition text.
class ParseError : public Error {
 public:
  using Error::Error;
};

// A cell set that does not form a valid region, or a region that does not
// satisfy an operation's precondition (e.g. simple connectivity).
class RegionError : public Error {
 public:
  using Error::Error;
};

// A tiling that is not a perfect matching of its region, or a flip that
// cannot be applied.
class TilingError : public Error {
 public:
  using Error::Error;
};

// A vertex labeling that is not a height function.
class HeightError : public Error {
 public:
  using Error::Error;
};

// Floating-point evaluation could not certify an integer result.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

// Enumeration produced more objects than the caller allowed.
class LimitExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace calisson
