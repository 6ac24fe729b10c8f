#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hopf_forge {

/// Failure categories raised by the library. Every throw site uses
/// hopf_forge::Error with one of these codes so callers (notably the CLI)
/// can map failures onto exit statuses without string matching.
enum class Errc {
  OrderMismatch,
  DivisionByZero,
  BoundExceeded,
  NotSquare,
  DimensionMismatch,
  OrderExceedsBound,
  NotInvertible,
  MalformedTensor,
  NoAntipode,
  EigenvalueNotInField,
  IntegralSpaceNotOneDim,
  DegeneratePairing,
  NotProportional,
  NotNormalized,
  NotARootPower,
  NonCommuting,
  NonSplitting,
  IndexOne,
  IndexEven,
  SpectrumNotPlusMinusOne,
  PreconditionFailed,
  NotInvariant,
  OffPatternBlock,
  NotAGroup,
  BadParameters,
  ParseError,
};

std::string_view to_string(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace hopf_forge
