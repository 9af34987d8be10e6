#pragma once

#include <stdexcept>
#include <string>

namespace wlab {

// Base of every error raised by the library. Each precondition failure maps
// to exactly one subclass so callers (and tests) can catch by kind.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define WLAB_DEFINE_ERROR(Name)                                  \
    class Name : public Error {                                  \
    public:                                                      \
        explicit Name(const std::string& what) : Error(what) {}  \
    }

WLAB_DEFINE_ERROR(ZeroVector);
WLAB_DEFINE_ERROR(LengthMismatch);
WLAB_DEFINE_ERROR(DimensionMismatch);
WLAB_DEFINE_ERROR(UnknownQubit);
WLAB_DEFINE_ERROR(NullOutcome);
WLAB_DEFINE_ERROR(BadParams);
WLAB_DEFINE_ERROR(BadDensity);
WLAB_DEFINE_ERROR(BadPairing);
WLAB_DEFINE_ERROR(Ambiguous);

#undef WLAB_DEFINE_ERROR

}  // namespace wlab
