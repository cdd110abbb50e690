#pragma once

#include <stdexcept>
#include <string>

namespace springer {

// Domain errors carry a stable kind string so the CLI can map them to exit
// codes and JSON error objects without string-matching what().
class DomainError : public std::runtime_error {
public:
    DomainError(std::string kind, const std::string& msg)
        : std::runtime_error(kind + ": " + msg), kind_(std::move(kind)) {}
    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

#define SPRINGER_DEFINE_ERROR(Name)                                        \
    class Name : public DomainError {                                      \
    public:                                                                \
        explicit Name(const std::string& msg) : DomainError(#Name, msg) {} \
    }

SPRINGER_DEFINE_ERROR(SubstitutionNotInvertible);
SPRINGER_DEFINE_ERROR(DivisionByZero);
SPRINGER_DEFINE_ERROR(NotAComplex);
SPRINGER_DEFINE_ERROR(RootDatumMismatch);
SPRINGER_DEFINE_ERROR(NotDominant);
SPRINGER_DEFINE_ERROR(NeedsSquareRoot);
SPRINGER_DEFINE_ERROR(TruncationTooSmall);
SPRINGER_DEFINE_ERROR(DifferentialNotSquareZero);
SPRINGER_DEFINE_ERROR(RootOfUnityQ);
SPRINGER_DEFINE_ERROR(NotQCommuting);
SPRINGER_DEFINE_ERROR(ModelInconsistent);
SPRINGER_DEFINE_ERROR(DimensionMismatch);
SPRINGER_DEFINE_ERROR(DuplicateLabel);
SPRINGER_DEFINE_ERROR(BadComposition);
SPRINGER_DEFINE_ERROR(ParseError);

#undef SPRINGER_DEFINE_ERROR

}  // namespace springer
