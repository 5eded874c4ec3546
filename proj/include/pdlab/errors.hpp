#ifndef PDLAB_ERRORS_HPP
#define PDLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pdlab {

// Bad configuration: mismatched grids, invalid parameters, malformed input.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Mathematical-domain violation (kappa <= 0, family/s mismatch, ...).
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Trace series with Hilbert-Schmidt norm >= 1: the expansion is meaningless.
struct DivergenceError : std::runtime_error {
    explicit DivergenceError(const std::string& what) : std::runtime_error(what) {}
};

// det2 evaluated with an eigenvalue at or below -1.
struct DeterminantDomainError : std::runtime_error {
    DeterminantDomainError(const std::string& what, double eigenvalue)
        : std::runtime_error(what), offending_eigenvalue(eigenvalue) {}
    double offending_eigenvalue;
};

// Time integration produced non-finite coefficients.
struct BlowupError : std::runtime_error {
    BlowupError(const std::string& what, double t)
        : std::runtime_error(what), last_good_time(t) {}
    double last_good_time;
};

// Internal consistency failure (e.g. a real flow drifting off the real line).
struct InternalError : std::runtime_error {
    explicit InternalError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace pdlab

#endif
