#pragma once

#include <limits>
#include <utility>
#include <vector>

#include "qlps/density_engine.hpp"

namespace qlps {

inline constexpr double kInfTime = std::numeric_limits<double>::infinity();

// Per-qubit T1/T2 plus the shared gate-step timing. dt = gate_time / substeps.
struct NoiseSpec {
    std::vector<double> t1;
    std::vector<double> t2;
    double gate_time = 1.0;
    int substeps = 20;

    double dt() const { return gate_time / substeps; }
    int n_qubits() const { return static_cast<int>(t1.size()); }
    void validate() const;
    bool qubit_is_noisy(int q) const;
    NoiseSpec with_appended(double t1q, double t2q) const;
};

NoiseSpec uniform_noise(int n, double t1, double t2, double gate_time = 1.0, int substeps = 20);
NoiseSpec noiseless(int n, double gate_time = 1.0, int substeps = 20);

enum class NoiseKind { Dephasing, Damping };

// (p_decay, p_dephase) for one substep on one qubit.
std::pair<double, double> substep_probs(const NoiseSpec& spec, int qubit);

void apply_amplitude_damping(DensityState& state, int qubit, double p_decay);
void apply_dephasing(DensityState& state, int qubit, double p_dephase);

// (1-p) rho + (p/3)(X rho X + Y rho Y + Z rho Z). Completely positive for
// p <= 3/4 in this parameterization; accepted up to 1.
void apply_depolarizing(DensityState& state, int qubit, double p);
inline constexpr double kDepolarizingCpLimit = 0.75;

// One decoherence substep: amplitude damping then dephasing on each listed
// qubit. Qubits outside `active` receive no channel at all.
void decohere_all(DensityState& state, const NoiseSpec& spec, std::span<const int> active);

// Fidelity after one idle gate-step on the state most susceptible to the
// given noise kind (|+> for dephasing, |1> for damping). The x-axis of every
// threshold plot.
double worst_case_gate_fidelity(const NoiseSpec& spec, NoiseKind kind, int qubit = 0);

// T2/Tg ratio that produces a given worst-case dephasing gate fidelity.
double t2_ratio_for_fidelity(double wc_fidelity);

}  // namespace qlps
