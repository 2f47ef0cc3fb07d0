// errors.hpp — exception types shared by the jcwind modules

#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace jcwind {

// Invalid input parameter; carries the offending field name.
class ValidationError : public std::invalid_argument {
public:
    ValidationError(std::string field, const std::string& what)
        : std::invalid_argument(what), field_(std::move(field)) {}
    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

// Both branches of a block coalesce (A = B = 0); the branch split is undefined.
class ExceptionalPointError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Zero-norm eigenvector: the state does not exist for these parameters.
class DegenerateStateError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A closed-form boundary has a vanishing denominator in the requested variable.
class NoBoundaryError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Quantity undefined exactly on a transition (winding direction, tilt).
class OnBoundaryError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A numerical procedure could not certify its result.
class NumericalFailure : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

class GridTooCoarseError : public NumericalFailure {
    using NumericalFailure::NumericalFailure;
};

// Section signs do not alternate: the curve has anti-winding nodes.
class AntiWindingError : public NumericalFailure {
    using NumericalFailure::NumericalFailure;
};

}  // namespace jcwind
