#pragma once

#include <stdexcept>
#include <string>

namespace ellip {

/// Base class of every domain error raised by the library. The CLI maps
/// these to exit code 3.
class DomainError : public std::runtime_error {
 public:
  DomainError(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define ELLIP_DEFINE_ERROR(Name)                                        \
  class Name : public DomainError {                                     \
   public:                                                              \
    explicit Name(const std::string& what) : DomainError(#Name, what) {} \
  };

ELLIP_DEFINE_ERROR(SingularCurve)
ELLIP_DEFINE_ERROR(BadMultiplier)
ELLIP_DEFINE_ERROR(BadOrientation)
ELLIP_DEFINE_ERROR(BadPrecision)
ELLIP_DEFINE_ERROR(DivisionByZero)
ELLIP_DEFINE_ERROR(NearPole)
ELLIP_DEFINE_ERROR(AtPole)
ELLIP_DEFINE_ERROR(BadPoint)
ELLIP_DEFINE_ERROR(DomainViolation)
ELLIP_DEFINE_ERROR(CurveMismatch)
ELLIP_DEFINE_ERROR(UnresolvedPoles)
ELLIP_DEFINE_ERROR(RadiusTooSmall)
ELLIP_DEFINE_ERROR(NonIntegralValues)
ELLIP_DEFINE_ERROR(NonzeroDegree)
ELLIP_DEFINE_ERROR(SupportTooLarge)
ELLIP_DEFINE_ERROR(NotADivisorOfAFunction)
ELLIP_DEFINE_ERROR(SingularGauge)
ELLIP_DEFINE_ERROR(SingularA)
ELLIP_DEFINE_ERROR(ZeroTrailingCoefficient)
ELLIP_DEFINE_ERROR(DimensionMismatch)
ELLIP_DEFINE_ERROR(NotUnipotent)
ELLIP_DEFINE_ERROR(NotNilpotent)
ELLIP_DEFINE_ERROR(NotCommuting)
ELLIP_DEFINE_ERROR(HypothesisViolated)
ELLIP_DEFINE_ERROR(ImpossibleCase)
ELLIP_DEFINE_ERROR(Unsupported)
ELLIP_DEFINE_ERROR(ParseError)

#undef ELLIP_DEFINE_ERROR

}  // namespace ellip
