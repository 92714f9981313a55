#pragma once

#include <string_view>
#include <vector>

#include "qlps/errors.hpp"
#include "qlps/linalg.hpp"

namespace qlps {

inline constexpr int kDefaultMaxQubits = 8;
inline constexpr double kProjectionFloor = 1e-14;

// Unnormalized-history density matrix over n qubits. The matrix itself is kept
// at trace one; `trace_log` keeps the retained fraction Ps of every past
// post-selection so lost information stays reconstructible.
struct DensityState {
    int n_qubits = 0;
    Mat rho;
    std::vector<double> trace_log;

    long dim() const { return rho.rows(); }
};

struct QubitOperator {
    int n_qubits = 0;
    Mat matrix;
};

DensityState new_state(int n, std::string_view bits, int max_qubits = kDefaultMaxQubits);

// Tensor-product embedding: `op` acts on `targets` (first target = most
// significant bit of the small operator), identity elsewhere.
Mat embed(const Mat& op, std::span<const int> targets, int n);

// rho <- U rho U^dagger with a full-register U.
void apply_unitary(DensityState& state, const Mat& u);

// rho <- (U x I) rho (U x I)^dagger where `u` is a 2^k x 2^k operator on
// `targets`. Works for any local operator (also projectors); does not
// renormalize. This is the hot path of the simulator.
void apply_local_operator(DensityState& state, const Mat& u, std::span<const int> targets);

DensityState partial_trace(const DensityState& state, std::span<const int> keep);

// Tensor product of two states; qubits of `a` come first (most significant).
// At most one of the two trace logs may be nonempty.
DensityState tensor(const DensityState& a, const DensityState& b);

// rho <- P rho P^dagger / Ps with Ps = Tr(P rho P)/Tr(rho); Ps is appended to
// trace_log when `record_trace` (post-selections record, sampled collapses do
// not). Throws ImpossibleBranchError when Ps < floor.
double project(DensityState& state, const Mat& p, bool record_trace = true,
               double floor = kProjectionFloor);

// Same contract as project() for an operator supported on `targets` only.
double project_local(DensityState& state, const Mat& p, std::span<const int> targets,
                     bool record_trace = true, double floor = kProjectionFloor);

// Cheap validity checks (Hermiticity + unit trace). Eigenvalue positivity is
// asserted in the test suite, not per call.
void check_state(const DensityState& state, double tol = 1e-10);

double fidelity_with_pure(const DensityState& state, const Vec& psi);

}  // namespace qlps
