#pragma once

#include <stdexcept>
#include <string>

namespace gatekit {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

#define GATEKIT_DEFINE_ERROR(Name)                       \
  class Name : public Error {                            \
  public:                                                \
    explicit Name(const std::string& what) : Error(what) {} \
  }

// delay_model
GATEKIT_DEFINE_ERROR(TooFewSamples);
GATEKIT_DEFINE_ERROR(DegenerateData);
// conflict
GATEKIT_DEFINE_ERROR(FitFailure);
// schedule
GATEKIT_DEFINE_ERROR(SameFlight);
GATEKIT_DEFINE_ERROR(BadFactor);
GATEKIT_DEFINE_ERROR(InvalidSchedule);
// optimizer
GATEKIT_DEFINE_ERROR(IncompleteAssignment);
GATEKIT_DEFINE_ERROR(InfeasibleInput);
GATEKIT_DEFINE_ERROR(NoFeasibleGate);
GATEKIT_DEFINE_ERROR(NoFeasibleStart);
GATEKIT_DEFINE_ERROR(NoFeasibleAssignment);
GATEKIT_DEFINE_ERROR(TooLarge);
// transit
GATEKIT_DEFINE_ERROR(MissingGeometry);
GATEKIT_DEFINE_ERROR(BadDimensions);
// io
GATEKIT_DEFINE_ERROR(ParseError);

#undef GATEKIT_DEFINE_ERROR

/// Adaptive quadrature ran out of subdivisions before meeting its tolerance.
class QuadratureNonConvergence : public Error {
public:
  QuadratureNonConvergence(const std::string& what, double error_estimate)
      : Error(what), error_estimate_(error_estimate) {}

  double error_estimate() const noexcept { return error_estimate_; }

private:
  double error_estimate_;
};

}  // namespace gatekit
