#pragma once

#include <stdexcept>
#include <string>

namespace nschur {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define NSCHUR_DEFINE_ERROR(Name)                                    \
    class Name : public Error {                                      \
    public:                                                          \
        explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
    }

NSCHUR_DEFINE_ERROR(ParseError);
NSCHUR_DEFINE_ERROR(DegenerateSubstitution);
NSCHUR_DEFINE_ERROR(InvalidRange);
NSCHUR_DEFINE_ERROR(NotInSkn);
NSCHUR_DEFINE_ERROR(SingularH0);
NSCHUR_DEFINE_ERROR(RankDeficient);
NSCHUR_DEFINE_ERROR(NonStabilizing);
NSCHUR_DEFINE_ERROR(NonMonic);
NSCHUR_DEFINE_ERROR(DomainExceeded);
NSCHUR_DEFINE_ERROR(PoleNearSample);
NSCHUR_DEFINE_ERROR(TruncationInsufficient);

#undef NSCHUR_DEFINE_ERROR

}  // namespace nschur
