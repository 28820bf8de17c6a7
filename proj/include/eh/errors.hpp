#pragma once

#include <stdexcept>
#include <string>

namespace eh {

// Base class for all errors raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid argument values (bad shape parameters, malformed options).
struct ParameterError : Error {
    using Error::Error;
};

// Input outside the mathematical domain of an operation (e.g. shape_for on a
// non-caterpillar).
struct DomainError : Error {
    using Error::Error;
};

// Instance too large for an operation with an enforced size cap.
struct SizeError : Error {
    using Error::Error;
};

// A stated precondition does not hold; checked eagerly.
struct PreconditionError : Error {
    using Error::Error;
};

// The operation cannot succeed on this input (caller's feasibility condition
// failed), e.g. a bud pool exhausted below its growth threshold.
struct InfeasibleError : Error {
    using Error::Error;
};

// Certificate JSON that does not match the schema or references invalid ids.
struct MalformedCertificateError : Error {
    using Error::Error;
};

// Honest end-of-pipeline failure: no certificate could be produced at this
// scale/parameterization. Carries human-readable diagnostics.
struct DiagnosticError : Error {
    using Error::Error;
};

// Result of a validator: ok, or the first violated constraint.
struct CheckResult {
    bool ok = true;
    std::string reason;

    static CheckResult pass() { return {true, {}}; }
    static CheckResult fail(std::string why) { return {false, std::move(why)}; }
    explicit operator bool() const { return ok; }
};

}  // namespace eh
