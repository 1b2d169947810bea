#ifndef EISCOC_ERROR_HPP
#define EISCOC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace eiscoc {

enum class Err {
    ZeroIndex,
    DivisionByZero,
    NonUnitIndex,
    NonIntegral,
    ZeroLeadingTerm,
    DimensionMismatch,
    NotUnimodular,
    NotInGamma0,
    NotInGamma1,
    NotCoprime,
    NotACosetSystem,
    BadDeterminant,
    ZeroPolynomial,
    RayOnSingularLocus,
    BadWedge,
    EmptyArc,
    InsufficientPrecision,
    DenominatorNotSplit,
    DegenerateDirection,
    BadOrientation,
    UnsupportedLevelShape,
    SingularMatrix,
    NotPrime,
    TorsionIndexZero,
    BadAuxiliary,
    PrecisionTooLow,
    Overflow,
    Internal
};

const char* err_name(Err e);

class Error : public std::runtime_error {
public:
    Error(Err kind, const std::string& what)
        : std::runtime_error(std::string(err_name(kind)) + ": " + what), kind_(kind) {}
    Err kind() const { return kind_; }

private:
    Err kind_;
};

inline const char* err_name(Err e)
{
    switch (e) {
    case Err::ZeroIndex: return "ZeroIndex";
    case Err::DivisionByZero: return "DivisionByZero";
    case Err::NonUnitIndex: return "NonUnitIndex";
    case Err::NonIntegral: return "NonIntegral";
    case Err::ZeroLeadingTerm: return "ZeroLeadingTerm";
    case Err::DimensionMismatch: return "DimensionMismatch";
    case Err::NotUnimodular: return "NotUnimodular";
    case Err::NotInGamma0: return "NotInGamma0";
    case Err::NotInGamma1: return "NotInGamma1";
    case Err::NotCoprime: return "NotCoprime";
    case Err::NotACosetSystem: return "NotACosetSystem";
    case Err::BadDeterminant: return "BadDeterminant";
    case Err::ZeroPolynomial: return "ZeroPolynomial";
    case Err::RayOnSingularLocus: return "RayOnSingularLocus";
    case Err::BadWedge: return "BadWedge";
    case Err::EmptyArc: return "EmptyArc";
    case Err::InsufficientPrecision: return "InsufficientPrecision";
    case Err::DenominatorNotSplit: return "DenominatorNotSplit";
    case Err::DegenerateDirection: return "DegenerateDirection";
    case Err::BadOrientation: return "BadOrientation";
    case Err::UnsupportedLevelShape: return "UnsupportedLevelShape";
    case Err::SingularMatrix: return "SingularMatrix";
    case Err::NotPrime: return "NotPrime";
    case Err::TorsionIndexZero: return "TorsionIndexZero";
    case Err::BadAuxiliary: return "BadAuxiliary";
    case Err::PrecisionTooLow: return "PrecisionTooLow";
    case Err::Overflow: return "Overflow";
    case Err::Internal: return "Internal";
    }
    return "Unknown";
}

} // namespace eiscoc

#endif
