#pragma once

#include <stdexcept>
#include <string>

namespace fsv {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define FSV_DEFINE_ERROR(Name)                                                 \
    class Name : public Error {                                                \
    public:                                                                    \
        explicit Name(const std::string& what) : Error(#Name ": " + what) {}   \
    };

FSV_DEFINE_ERROR(DomainError)
FSV_DEFINE_ERROR(QuadratureFailure)
FSV_DEFINE_ERROR(MissingSlot)
FSV_DEFINE_ERROR(WindowError)
FSV_DEFINE_ERROR(NonMonotone)
FSV_DEFINE_ERROR(OutOfRange)
FSV_DEFINE_ERROR(DegenerateZeta)
FSV_DEFINE_ERROR(GridTooSmall)
FSV_DEFINE_ERROR(VariantMismatch)
FSV_DEFINE_ERROR(SingularFit)
FSV_DEFINE_ERROR(StabilityViolation)
FSV_DEFINE_ERROR(SingularityHit)
FSV_DEFINE_ERROR(UnknownEntry)

#undef FSV_DEFINE_ERROR

}  // namespace fsv
