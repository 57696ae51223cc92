// errors.hpp — exception types shared across the library
#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace greencut {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Model fails a structural invariant (bad band edges, too few samples, ...).
struct InvalidModelError : Error {
    using Error::Error;
};

// Argument outside the operation's domain (energy outside the band, t < 0, ...).
struct DomainError : Error {
    using Error::Error;
};

// Evaluation requested inside the guard radius of a branch point.
struct BranchPointError : Error {
    using Error::Error;
};

// No trustworthy analytic continuation exists (tabulated data, bad sheet index).
struct ContinuationUnavailableError : Error {
    using Error::Error;
};

// Quadrature could not reach the requested tolerance; carries the best estimate.
struct AccuracyError : Error {
    std::complex<double> estimate;
    double achieved;
    AccuracyError(const std::string& msg, std::complex<double> est, double ach)
        : Error(msg), estimate(est), achieved(ach) {}
};

// Not enough data to perform a fit (tail envelope needs >= 5 maxima).
struct InsufficientDataError : Error {
    using Error::Error;
};

// Second-order poles have no simple residue; excluded from time-domain sums.
struct SecondOrderResidueError : Error {
    using Error::Error;
};

}  // namespace greencut
