#pragma once

#include <stdexcept>
#include <string>

namespace dualart {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define DUALART_ERROR(Name)                  \
  class Name : public Error {                \
   public:                                   \
    explicit Name(const std::string& what)   \
        : Error(#Name ": " + what) {}        \
  }

DUALART_ERROR(ParseError);
DUALART_ERROR(InvalidMatrix);
DUALART_ERROR(IndexOutOfRange);
DUALART_ERROR(SystemMismatch);
DUALART_ERROR(StrandMismatch);
DUALART_ERROR(RankMismatch);
DUALART_ERROR(IncompleteOrbit);
DUALART_ERROR(NotInInterval);
DUALART_ERROR(IncompleteInterval);
DUALART_ERROR(NotAnAtom);
DUALART_ERROR(UnsupportedSystem);
DUALART_ERROR(ProjectionMismatch);
DUALART_ERROR(InvalidGraphShape);
DUALART_ERROR(UnsupportedKind);
DUALART_ERROR(CorruptCacheEntry);

#undef DUALART_ERROR

}  // namespace dualart
