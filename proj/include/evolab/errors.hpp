#pragma once

#include <stdexcept>
#include <string>

namespace evolab {

/// Base class of every error raised by the library. `code()` is a stable
/// identifier used by the command-line front end to pick an exit status.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

#define EVOLAB_DEFINE_ERROR(Name)                                         \
    class Name : public Error {                                           \
    public:                                                               \
        explicit Name(const std::string& what) : Error(#Name, what) {}    \
    }

EVOLAB_DEFINE_ERROR(MixedFieldError);
EVOLAB_DEFINE_ERROR(DivisionByZero);
EVOLAB_DEFINE_ERROR(InfiniteFieldError);
EVOLAB_DEFINE_ERROR(CharacteristicTwoError);
EVOLAB_DEFINE_ERROR(DimensionMismatch);
EVOLAB_DEFINE_ERROR(EnumerationCapExceeded);
EVOLAB_DEFINE_ERROR(NotIdeal);
EVOLAB_DEFINE_ERROR(NotBasicIdeal);
EVOLAB_DEFINE_ERROR(NotOneDimensional);
EVOLAB_DEFINE_ERROR(NotSolvable);
EVOLAB_DEFINE_ERROR(WrongDimension);
EVOLAB_DEFINE_ERROR(InvalidFamilySpec);
EVOLAB_DEFINE_ERROR(UnsatisfiableProfile);
EVOLAB_DEFINE_ERROR(StructuralPreconditionFailed);
EVOLAB_DEFINE_ERROR(UnsupportedOverInfiniteField);
EVOLAB_DEFINE_ERROR(JoinEscapesSet);
EVOLAB_DEFINE_ERROR(NormalFormScalingUnavailable);
EVOLAB_DEFINE_ERROR(ParseError);
EVOLAB_DEFINE_ERROR(InvalidArgument);

#undef EVOLAB_DEFINE_ERROR

}  // namespace evolab
