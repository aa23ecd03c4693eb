#ifndef KPRAB_ERRORS_HPP
#define KPRAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace kprab {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Gamma_k evaluated at a pole of Gamma(x/k).
struct PoleError : Error {
    using Error::Error;
};

// |log Gamma_k| exceeds the double range; use log_k_gamma instead.
struct OverflowError : Error {
    using Error::Error;
};

struct DomainError : Error {
    using Error::Error;
};

// Series did not satisfy the stopping rule within max_terms.
struct NonConvergence : Error {
    using Error::Error;
};

// Panel doubling failed to settle within the requested tolerance.
struct QuadratureError : Error {
    using Error::Error;
};

// The boundary-coupling denominator is not strictly positive.
struct DegenerateConfig : Error {
    using Error::Error;
};

// Power iteration stagnated (e.g. oscillating dominant pair).
struct SpectralFailure : Error {
    using Error::Error;
};

} // namespace kprab

#endif
