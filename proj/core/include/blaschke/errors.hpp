#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace blaschke {

// Base class for every failure this library reports on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Argument outside the closed unit disk, invalid map data, bad preconditions.
struct DomainError : Error {
    using Error::Error;
};

// No Maclaurin coefficient above the series tolerance up to the search cap.
struct SeriesResolutionError : Error {
    using Error::Error;
};

// A refined root landed at modulus >= 1 - escape margin; preimages of an
// interior point are interior, so this signals numerical breakdown.
struct RootEscapeError : Error {
    using Error::Error;
};

// Root refinement or an iterative solve did not reach its residual target.
struct ConvergenceError : Error {
    using Error::Error;
};

// No probe point with a usable nonzero value was found.
struct ProbeError : Error {
    using Error::Error;
};

// Explicit zero list whose running Blaschke sum exceeds the configured cap.
struct DivergenceError : Error {
    using Error::Error;
};

// Requested truncation tolerance unreachable within the factor ceiling.
struct TolError : Error {
    using Error::Error;
};

// Adaptive quadrature ran out of panels before meeting its error target.
struct QuadError : Error {
    using Error::Error;
};

// Radius schedule not strictly increasing inside (0,1), or too short.
struct ScheduleError : Error {
    using Error::Error;
};

// Target point coincides with F(0); the level-set condition applies instead.
struct TargetCoincidesError : Error {
    using Error::Error;
};

struct GridError : Error {
    using Error::Error;
};

// Case-specific hypothesis violated (e.g. a equals A(0) in the generic case).
struct CaseMismatchError : Error {
    using Error::Error;
};

// C(0) met a multiple preimage cluster; the simple-zero derivation does not
// apply and the instance is reported rather than forced through.
struct MultiplicityError : Error {
    using Error::Error;
};

// Continuation step size underflowed while tracking the solution path.
struct ContinuationStallError : Error {
    using Error::Error;
};

struct CriticalMismatchError : Error {
    using Error::Error;
};

// Degree of a truncation exceeds what the dense root-finding path supports.
struct DegreeCapError : Error {
    using Error::Error;
};

// Schwarz sandwich inequality failed; carries the offending location.
struct SandwichViolation : Error {
    double radius = -1.0;
    std::complex<double> point{0.0, 0.0};
    bool at_grid_point = false;

    SandwichViolation(const std::string& msg, double r) : Error(msg), radius(r) {}
    SandwichViolation(const std::string& msg, std::complex<double> z)
        : Error(msg), point(z), at_grid_point(true) {}
};

}  // namespace blaschke
