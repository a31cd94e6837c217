#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mldn {

enum class Errc {
  VerticalLine,
  DegenerateLine,
  NonPositiveLambda,
  EmptyIdeal,
  InvalidIdeal,
  ZeroVector,
  NegativeComponent,
  NoLatticeStep,
  RadiusTooSmall,
  NoComputingDivisorInRadius,
  PolygonWithoutOne,
  PolygonContainsOne,
  ProofInvariantViolated,
  EmptySet,
  InvariantViolation,
  Overflow,
  Parse,
};

constexpr std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::VerticalLine: return "VerticalLine";
    case Errc::DegenerateLine: return "DegenerateLine";
    case Errc::NonPositiveLambda: return "NonPositiveLambda";
    case Errc::EmptyIdeal: return "EmptyIdeal";
    case Errc::InvalidIdeal: return "InvalidIdeal";
    case Errc::ZeroVector: return "ZeroVector";
    case Errc::NegativeComponent: return "NegativeComponent";
    case Errc::NoLatticeStep: return "NoLatticeStep";
    case Errc::RadiusTooSmall: return "RadiusTooSmall";
    case Errc::NoComputingDivisorInRadius: return "NoComputingDivisorInRadius";
    case Errc::PolygonWithoutOne: return "PolygonWithoutOne";
    case Errc::PolygonContainsOne: return "PolygonContainsOne";
    case Errc::ProofInvariantViolated: return "ProofInvariantViolated";
    case Errc::EmptySet: return "EmptySet";
    case Errc::InvariantViolation: return "InvariantViolation";
    case Errc::Overflow: return "Overflow";
    case Errc::Parse: return "Parse";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace mldn
