#pragma once

#include <stdexcept>
#include <string>

namespace sl2c {

/// Base class for every error raised by the library. `kind()` is a stable
/// machine-readable tag (used verbatim in CLI error objects).
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(what), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

#define SL2C_DEFINE_ERROR(Name)                                              \
    class Name : public Error {                                              \
    public:                                                                  \
        explicit Name(const std::string& what) : Error(#Name, what) {}      \
    };

// Input-level failures: the caller handed us something outside the domain.
SL2C_DEFINE_ERROR(IsotropicVector)
SL2C_DEFINE_ERROR(ZeroVector)
SL2C_DEFINE_ERROR(ConstraintViolation)
SL2C_DEFINE_ERROR(NotUnimodular)
SL2C_DEFINE_ERROR(NonRealAxis)
SL2C_DEFINE_ERROR(TailNotAdmissible)
SL2C_DEFINE_ERROR(NotUnitVector)

// Numerical failures: valid input, but a construction hit a pathology.
SL2C_DEFINE_ERROR(NumericalDegeneracy)
SL2C_DEFINE_ERROR(DegenerateCompositionFailure)

#undef SL2C_DEFINE_ERROR

}  // namespace sl2c
