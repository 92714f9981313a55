#pragma once

#include <stdexcept>
#include <string>

namespace qlps {

// Base class for all simulator errors.
struct SimError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad call arguments (dimension mismatch, out-of-range qubit, invalid probability...).
struct ArgumentError : SimError {
    using SimError::SimError;
};

// Register would exceed the configured qubit capacity.
struct CapacityError : SimError {
    using SimError::SimError;
};

// Post-selected a branch whose probability is below the configured floor.
struct ImpossibleBranchError : SimError {
    using SimError::SimError;
};

// Kitaev estimator could not reconcile a digit (both candidates outside 1/4).
struct EstimationFailureError : SimError {
    using SimError::SimError;
};

// Pruned branch mass exceeded the configured accuracy bound.
struct AccuracyError : SimError {
    using SimError::SimError;
};

// Circular mean is undefined (zero resultant).
struct UndefinedMeanError : SimError {
    using SimError::SimError;
};

// All probability mass was post-selected away (l_i >= 1).
struct InformationLostError : SimError {
    using SimError::SimError;
};

// An internal table or derived object failed its consistency checks.
struct ConstructionError : SimError {
    using SimError::SimError;
};

}  // namespace qlps
