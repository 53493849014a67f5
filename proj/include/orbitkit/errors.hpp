#ifndef ORBITKIT_ERRORS_HPP
#define ORBITKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace orbitkit {

struct OrbitkitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// algebra_core
struct AntisymmetryViolation : OrbitkitError { using OrbitkitError::OrbitkitError; };
struct JacobiViolation : OrbitkitError { using OrbitkitError::OrbitkitError; };
struct NotNilpotent : OrbitkitError { using OrbitkitError::OrbitkitError; };

// group_law
struct ClassTooHigh : OrbitkitError { using OrbitkitError::OrbitkitError; };

// poly_space
struct NotInvariant : OrbitkitError { using OrbitkitError::OrbitkitError; };

// enveloping
struct DegreeTooHigh : OrbitkitError { using OrbitkitError::OrbitkitError; };

// orbit
struct SectionFailure : OrbitkitError { using OrbitkitError::OrbitkitError; };
struct InternalInconsistency : OrbitkitError { using OrbitkitError::OrbitkitError; };

// rep_model
struct NotPolarization : OrbitkitError { using OrbitkitError::OrbitkitError; };
struct KernelCheckFailure : OrbitkitError { using OrbitkitError::OrbitkitError; };
struct QuadratureUnderResolved : OrbitkitError { using OrbitkitError::OrbitkitError; };

// numeric_verify
struct SupportOverflow : OrbitkitError { using OrbitkitError::OrbitkitError; };
struct CostGuard : OrbitkitError { using OrbitkitError::OrbitkitError; };

// step3
struct NotStep3 : OrbitkitError { using OrbitkitError::OrbitkitError; };
struct CenterHypothesisFailed : OrbitkitError { using OrbitkitError::OrbitkitError; };

// cli_io
struct ParseError : OrbitkitError { using OrbitkitError::OrbitkitError; };

} // namespace orbitkit

#endif
