#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "qlps/density_engine.hpp"

namespace qlps {

struct MeasurementRecord {
    std::vector<int> qubits;
    std::vector<int> outcome;       // one bit per measured qubit, list order
    double branch_probability = 1;  // probability of the sampled/collapsed branch
    double retained_trace = 1;      // cumulative product of the state's trace log
};

// The tensor-product projector P_m: identity on unmeasured qubits,
// (I + sigma_z)/2 or (I - sigma_z)/2 on measured ones.
Mat measurement_projector(const std::map<int, int>& outcomes, int n);

// Post-selection on computational-basis outcomes: project, record Ps in the
// trace log, renormalize, optionally trace out the measured qubits.
DensityState post_select(const DensityState& state, const std::map<int, int>& outcomes,
                         bool trace_out = false, double floor = kProjectionFloor);

// Probabilistic measurement via the cumulative-sum rule: draw x in (0,1),
// take the first diagonal index whose cumulative probability exceeds x.
// The collapse does not contribute to the trace log; the branch probability
// is reported in the record instead.
MeasurementRecord sample_measurement(DensityState& state, std::span<const int> qubits,
                                     std::mt19937_64& rng);

// Same rule with the uniform draw supplied by the caller.
MeasurementRecord sample_measurement_at(DensityState& state, std::span<const int> qubits,
                                        double x);

struct Branch {
    std::vector<int> outcome;
    double probability = 0;
    DensityState state;
};

// Exact branch enumeration over the listed qubits: all outcomes with
// probability > prune, each with its collapsed state. Outcome bits follow the
// qubit list order (first listed qubit first).
std::vector<Branch> branch_distribution(const DensityState& state, std::span<const int> qubits,
                                        double prune = 0.0);

// Marginal probabilities over the listed qubits (diagonal read-off).
std::vector<double> outcome_probabilities(const DensityState& state, std::span<const int> qubits);

// 1 - prod(Ps). The telescoping-sum form of the same quantity is evaluated as
// a cross-check and must agree within 1e-12.
double lost_information(std::span<const double> trace_log);

// Deterministic per-trajectory RNG stream derived from a root seed.
std::mt19937_64 rng_stream(std::uint64_t root_seed, std::uint64_t counter);

}  // namespace qlps
