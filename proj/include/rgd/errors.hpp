#pragma once

#include <stdexcept>
#include <string>

namespace rgd {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define RGD_ERROR(name)                     \
  class name : public Error {               \
   public:                                  \
    using Error::Error;                     \
  };

RGD_ERROR(DivisionByZero)
RGD_ERROR(FieldMismatch)
RGD_ERROR(ParseError)
RGD_ERROR(DimensionMismatch)
RGD_ERROR(NotInvertibleOverRing)
RGD_ERROR(NotMonomial)
RGD_ERROR(UnsupportedType)
RGD_ERROR(ReflectionLeftSystem)
RGD_ERROR(HalfIntegerLevel)
RGD_ERROR(NotPrenilpotent)
RGD_ERROR(WrongKind)
RGD_ERROR(IndexOutOfRange)
RGD_ERROR(MembershipViolation)
RGD_ERROR(NotInRootGroup)
RGD_ERROR(ResidueNotIdentity)
RGD_ERROR(PeelFailure)
RGD_ERROR(RankOneSolveFailed)
RGD_ERROR(ConfigError)

#undef RGD_ERROR

}  // namespace rgd
