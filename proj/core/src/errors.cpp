#include "hopf_forge/errors.hpp"

namespace hopf_forge {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::OrderMismatch: return "OrderMismatch";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::BoundExceeded: return "BoundExceeded";
    case Errc::NotSquare: return "NotSquare";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::OrderExceedsBound: return "OrderExceedsBound";
    case Errc::NotInvertible: return "NotInvertible";
    case Errc::MalformedTensor: return "MalformedTensor";
    case Errc::NoAntipode: return "NoAntipode";
    case Errc::EigenvalueNotInField: return "EigenvalueNotInField";
    case Errc::IntegralSpaceNotOneDim: return "IntegralSpaceNotOneDim";
    case Errc::DegeneratePairing: return "DegeneratePairing";
    case Errc::NotProportional: return "NotProportional";
    case Errc::NotNormalized: return "NotNormalized";
    case Errc::NotARootPower: return "NotARootPower";
    case Errc::NonCommuting: return "NonCommuting";
    case Errc::NonSplitting: return "NonSplitting";
    case Errc::IndexOne: return "IndexOne";
    case Errc::IndexEven: return "IndexEven";
    case Errc::SpectrumNotPlusMinusOne: return "SpectrumNotPlusMinusOne";
    case Errc::PreconditionFailed: return "PreconditionFailed";
    case Errc::NotInvariant: return "NotInvariant";
    case Errc::OffPatternBlock: return "OffPatternBlock";
    case Errc::NotAGroup: return "NotAGroup";
    case Errc::BadParameters: return "BadParameters";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace hopf_forge
