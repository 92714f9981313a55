#pragma once

#include <vector>

#include "qlps/linalg.hpp"

namespace qlps {

// Uhlmann fidelity Tr sqrt(sqrt(rho) sigma sqrt(rho)). Inputs are normalized
// first (projective operations leave sub-unit traces behind).
double fidelity(const Mat& rho, const Mat& sigma);

// Tr |rho - sigma|^2 with |A| = sqrt(A^dagger A); for Hermitian inputs this is
// the squared Frobenius norm of the difference.
double distance(const Mat& rho, const Mat& sigma);

enum class SigmaDefinition {
    CircularStd,       // sqrt(-2 ln R)
    AngularDeviation,  // sqrt(2 (1 - R))
};

struct CircularStats {
    double mean = 0;       // turns, in [0, 1)
    double sigma = 0;      // turns
    double resultant = 0;  // R in [0, 1]
};

// Circular statistics of a phase histogram over 2^m bins. Bins are normalized
// internally; throws UndefinedMeanError when the resultant vanishes.
CircularStats circular_stats(std::span<const double> bins,
                             SigmaDefinition def = SigmaDefinition::CircularStd);

// Distance between two phases on the unit circle, in turns.
double circular_distance(double a, double b);

// Minimal trials for the statistical error to reach the digital error 2^-m:
// 2^(2m) sigma^2 / (1 - lost_info).
double n_min(int m, double sigma, double lost_info);

struct TrialBound {
    double n = 0;
    bool failed = false;  // D above the (sqrt(2)-1)/2 fail threshold
};

// Minimal Kitaev trial count for success probability 1 - epsilon.
TrialBound kitaev_trial_bound(double epsilon, double d, double lost_info);

// Sum of the two histogram bins bracketing the true phase (in turns).
double success_probability(std::span<const double> bins, double true_phase, int m);

// Majority-vote update of a binary outcome distribution over n odd repeats.
std::pair<double, double> majority_vote_update(double p0, double p1, int n);

struct ScalingFit {
    double exponent = 0;
    double coefficient = 0;
    double residual = 0;  // rms residual of the log-log fit
    int dropped = 0;      // nonpositive P_error points removed
};

// Least-squares fit of log(P_error) = exponent * log(p) + log(coefficient).
ScalingFit fit_error_scaling(std::span<const std::pair<double, double>> points);

}  // namespace qlps
