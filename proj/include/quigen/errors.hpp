#pragma once

#include <stdexcept>
#include <string>

namespace quigen {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// shape disagreement between operands; always a caller bug
struct DimensionMismatch : Error {
  using Error::Error;
};

struct ParseError : Error {
  int line;
  ParseError(int line_, const std::string& what_)
      : Error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

// some path of length N does not reduce to zero: N too small or the
// ideal is not admissible
struct AdmissibilityError : Error {
  using Error::Error;
};

// the Krull-Schmidt splitting strategy could neither split the module
// nor certify that its endomorphism ring is local
struct SplitExhaustion : Error {
  using Error::Error;
};

// an extension problem that must be solvable by injectivity had no
// solution; indicates an internal bug, never user input
struct ExtensionFailure : Error {
  using Error::Error;
};

}  // namespace quigen
