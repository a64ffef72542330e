#pragma once

#include <stdexcept>
#include <string>

namespace spslat {

// Base of every error raised by the library. Subclasses carry the
// failure kind in their type; what() carries the detail.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define SPSLAT_DEFINE_ERROR(Name)                 \
  class Name : public Error {                     \
   public:                                        \
    explicit Name(const std::string& what_arg)    \
        : Error(#Name ": " + what_arg) {}         \
  }

SPSLAT_DEFINE_ERROR(NotALattice);
SPSLAT_DEFINE_ERROR(NotAcyclic);
SPSLAT_DEFINE_ERROR(NotTransitivelyReduced);
SPSLAT_DEFINE_ERROR(NoDiagram);
SPSLAT_DEFINE_ERROR(InvalidSlope);
SPSLAT_DEFINE_ERROR(NotA4Cell);
SPSLAT_DEFINE_ERROR(NoTopEdge);
SPSLAT_DEFINE_ERROR(InvalidInput);
SPSLAT_DEFINE_ERROR(ParseError);

#undef SPSLAT_DEFINE_ERROR

}  // namespace spslat
