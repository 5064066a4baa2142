#pragma once

#include <stdexcept>
#include <string>

namespace etaq {

// Error taxonomy shared across the library.  Every failure mode that a
// caller can usefully distinguish gets its own code; the what() string
// carries the specifics.
enum class errc {
    no_such_root,
    precision_underflow,
    pole_at_infinity,
    insufficient_precision,
    non_squarefree_t,
    not_normalized,
    not_unit_eigenvalue,
    convergence_too_slow,
    feasibility_bound,
    not_found,
    empty_range,
    indeterminate,
    modulus_mismatch,
    ring_mismatch,
    attestation_required,
    hypothesis_violation,
    invalid_argument,
};

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    errc code() const { return code_; }

private:
    errc code_;
};

inline const char* errc_name(errc c) {
    switch (c) {
    case errc::no_such_root: return "NoSuchRoot";
    case errc::precision_underflow: return "PrecisionUnderflow";
    case errc::pole_at_infinity: return "PoleAtInfinity";
    case errc::insufficient_precision: return "InsufficientPrecision";
    case errc::non_squarefree_t: return "NonSquarefreeT";
    case errc::not_normalized: return "NotNormalized";
    case errc::not_unit_eigenvalue: return "NotUnitEigenvalue";
    case errc::convergence_too_slow: return "ConvergenceTooSlow";
    case errc::feasibility_bound: return "FeasibilityBound";
    case errc::not_found: return "NotFound";
    case errc::empty_range: return "EmptyRange";
    case errc::indeterminate: return "Indeterminate";
    case errc::modulus_mismatch: return "ModulusMismatch";
    case errc::ring_mismatch: return "RingMismatch";
    case errc::attestation_required: return "AttestationRequired";
    case errc::hypothesis_violation: return "HypothesisViolation";
    case errc::invalid_argument: return "InvalidArgument";
    }
    return "Unknown";
}

[[noreturn]] inline void fail(errc code, const std::string& msg) {
    throw Error(code, std::string(errc_name(code)) + ": " + msg);
}

} // namespace etaq
