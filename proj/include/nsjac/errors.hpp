#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nsjac {

enum class ErrorKind {
    NotPrime,
    ReducibleModulus,
    InvalidInput,
    DivisionByZero,
    FieldMismatch,
    BadDegrees,
    NotCoprime,
    BadCharacteristic,
    NoRationalPoint,
    SingularPoint,
    PointNotOnCurve,
    SpecialDivisor,
    NonSplitResult,
    NotSemiReduced,
    InternalFactorFailure,
    Internal,
};

const char* error_kind_name(ErrorKind kind);

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

#define NSJAC_DECLARE_ERROR(Name)                                                  \
    class Name : public Error {                                                    \
    public:                                                                        \
        explicit Name(const std::string& what) : Error(ErrorKind::Name, what) {}   \
    }

NSJAC_DECLARE_ERROR(NotPrime);
NSJAC_DECLARE_ERROR(ReducibleModulus);
NSJAC_DECLARE_ERROR(InvalidInput);
NSJAC_DECLARE_ERROR(DivisionByZero);
NSJAC_DECLARE_ERROR(FieldMismatch);
NSJAC_DECLARE_ERROR(BadDegrees);
NSJAC_DECLARE_ERROR(NotCoprime);
NSJAC_DECLARE_ERROR(BadCharacteristic);
NSJAC_DECLARE_ERROR(NoRationalPoint);
NSJAC_DECLARE_ERROR(SingularPoint);
NSJAC_DECLARE_ERROR(PointNotOnCurve);
NSJAC_DECLARE_ERROR(SpecialDivisor);
NSJAC_DECLARE_ERROR(NotSemiReduced);
NSJAC_DECLARE_ERROR(InternalFactorFailure);
NSJAC_DECLARE_ERROR(Internal);

#undef NSJAC_DECLARE_ERROR

/// Raised when a polynomial that must split over the working field does not.
/// `degrees` lists the degrees of the irreducible factors left over.
class NonSplitResult : public Error {
public:
    NonSplitResult(const std::string& what, std::vector<int> degrees)
        : Error(ErrorKind::NonSplitResult, what), degrees_(std::move(degrees)) {}

    const std::vector<int>& degrees() const noexcept { return degrees_; }

private:
    std::vector<int> degrees_;
};

}  // namespace nsjac
