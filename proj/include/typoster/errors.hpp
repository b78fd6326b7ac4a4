#pragma once

#include <stdexcept>
#include <string>

namespace typoster {

/// Base class for every failure raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define TYPOSTER_DEFINE_ERROR(Name)            \
  class Name : public Error {                  \
   public:                                     \
    using Error::Error;                        \
  }

TYPOSTER_DEFINE_ERROR(SchemaError);
TYPOSTER_DEFINE_ERROR(RangeError);
TYPOSTER_DEFINE_ERROR(UnknownTypeface);
TYPOSTER_DEFINE_ERROR(ParseError);
TYPOSTER_DEFINE_ERROR(DuplicateId);
TYPOSTER_DEFINE_ERROR(EmptyCatalog);
TYPOSTER_DEFINE_ERROR(UnsupportedLanguage);
TYPOSTER_DEFINE_ERROR(ResourceError);
TYPOSTER_DEFINE_ERROR(DegenerateRange);
TYPOSTER_DEFINE_ERROR(ProfileMismatch);
TYPOSTER_DEFINE_ERROR(MismatchedLines);
TYPOSTER_DEFINE_ERROR(EmptyStats);
TYPOSTER_DEFINE_ERROR(UnknownMetric);
TYPOSTER_DEFINE_ERROR(ConfigError);

#undef TYPOSTER_DEFINE_ERROR

}  // namespace typoster
