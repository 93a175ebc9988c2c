#pragma once

#include <stdexcept>
#include <string>

namespace matinv {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define MATINV_DEFINE_ERROR(Name)                                   \
    class Name : public Error {                                     \
    public:                                                         \
        explicit Name(const std::string& what) : Error(what) {}     \
    }

MATINV_DEFINE_ERROR(ZeroDenominator);
MATINV_DEFINE_ERROR(NotASquare);
MATINV_DEFINE_ERROR(SizeMismatch);
MATINV_DEFINE_ERROR(SingularMatrix);
MATINV_DEFINE_ERROR(IndexOutOfRange);
MATINV_DEFINE_ERROR(EmptyWord);
MATINV_DEFINE_ERROR(NotTraceZero);
MATINV_DEFINE_ERROR(NTooSmall);
MATINV_DEFINE_ERROR(InconsistentData);
MATINV_DEFINE_ERROR(FieldExtensionRequired);
MATINV_DEFINE_ERROR(NotTriangularizable);
MATINV_DEFINE_ERROR(NotUpperTriangular);
MATINV_DEFINE_ERROR(NotInCFamily);
MATINV_DEFINE_ERROR(BudgetExceeded);
MATINV_DEFINE_ERROR(ParseError);
MATINV_DEFINE_ERROR(LengthMismatch);

#undef MATINV_DEFINE_ERROR

}  // namespace matinv
