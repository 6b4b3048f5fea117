#pragma once

#include <stdexcept>
#include <string>

namespace hbim {

/// Base of every exception raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of the operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A field was requested at t <= 0 where no limit value is defined.
class DegenerateTimeError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Base for failures of an iterative numerical procedure.
class NumericalError : public Error {
public:
    using Error::Error;
};

/// Iteration or subdivision budget exhausted. Carries the best estimate reached.
class NonConvergenceError : public NumericalError {
public:
    NonConvergenceError(const std::string& what, double best_estimate)
        : NumericalError(what), best_estimate_(best_estimate) {}

    double best_estimate() const noexcept { return best_estimate_; }

private:
    double best_estimate_;
};

/// The root bracket does not contain a sign change.
class BracketError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

/// An ODE state became non-finite.
class DivergenceError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

/// Two constraint curves do not intersect on the exponent bracket.
class NoSolutionError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class DivisionError : public DomainError {
public:
    using DomainError::DomainError;
};

/// The over-specified heat-up stage has ended (delta reached the slab thickness).
class StageExceededError : public DomainError {
public:
    StageExceededError(const std::string& what, double heatup_time)
        : DomainError(what), heatup_time_(heatup_time) {}

    double heatup_time() const noexcept { return heatup_time_; }

private:
    double heatup_time_;
};

}  // namespace hbim
