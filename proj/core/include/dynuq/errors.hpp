#pragma once

#include <stdexcept>
#include <string>

namespace dynuq {

/// Linear-algebra breakdown (failed factorization, non-finite intermediate)
/// that persists after the usual jitter retry. The message names the
/// offending parameters or step.
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when a sampled forecast cannot produce meaningful quantiles
/// (e.g. more than half of the chains diverged).
class ForecastError : public std::runtime_error {
public:
    explicit ForecastError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace dynuq
