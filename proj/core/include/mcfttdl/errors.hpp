// SPDX-License-Identifier: Apache-2.0
#ifndef MCFTTDL_ERRORS_HPP
#define MCFTTDL_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace mcfttdl {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Bad inputs: out-of-range arguments, inconsistent models, malformed
// configuration.  The CLI maps these to exit code 1.
class ValidationError : public Error {
public:
    using Error::Error;
};

class RangeError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class IndexError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

// Cores of one link disagree on something that must be shared
// (anchor wavelength, nominal delay, ...).
class ModelConsistencyError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

// Configuration file problems.  Collects every issue found so a bad file
// is reported in one pass.
class ConfigError : public ValidationError {
public:
    ConfigError(const std::string& what, std::vector<std::string> issues)
        : ValidationError(what), issues_(std::move(issues)) {}
    explicit ConfigError(const std::string& what) : ValidationError(what) {}
    const std::vector<std::string>& issues() const { return issues_; }

private:
    std::vector<std::string> issues_;
};

// Numerical failures: non-convergence, cutoff, infeasible design targets.
// The CLI maps these to exit code 2.
class NumericalError : public Error {
public:
    using Error::Error;
};

// No guided solution in the search interval.
class CutoffError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class ConvergenceError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

// Design targets not reachable inside the given parameter bounds.
class InfeasibleError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

// Two adjacent cores with identical effective index: the phase-matching
// bend radius diverges.
class DegeneratePairError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

// Requested steered beam direction has no visible grating lobe.
class NoVisibleLobeError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

}

#endif
