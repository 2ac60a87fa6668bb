#pragma once

#include <stdexcept>
#include <string>

namespace facering {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define FACERING_DEFINE_ERROR(Name) \
  class Name : public Error {       \
   public:                          \
    using Error::Error;             \
  }

FACERING_DEFINE_ERROR(InvalidField);
FACERING_DEFINE_ERROR(DivisionByZero);
FACERING_DEFINE_ERROR(IndexOutOfRange);
FACERING_DEFINE_ERROR(DegreeMismatch);
FACERING_DEFINE_ERROR(LabelNotSubset);
FACERING_DEFINE_ERROR(NotComparable);
FACERING_DEFINE_ERROR(NotFaceElement);
FACERING_DEFINE_ERROR(SupportViolation);
FACERING_DEFINE_ERROR(ShapeMismatch);
FACERING_DEFINE_ERROR(WrongCharacteristic);
FACERING_DEFINE_ERROR(NotAcyclic);
FACERING_DEFINE_ERROR(DuplicateLabelSets);
FACERING_DEFINE_ERROR(UnknownModel);
FACERING_DEFINE_ERROR(ParseError);

#undef FACERING_DEFINE_ERROR

}  // namespace facering
