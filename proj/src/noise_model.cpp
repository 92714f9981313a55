#include "qlps/noise_model.hpp"

#include <cmath>

namespace qlps {

void NoiseSpec::validate() const {
    if (t1.size() != t2.size()) throw ArgumentError("t1/t2 lists differ in length");
    if (gate_time <= 0) throw ArgumentError("gate time must be positive");
    if (substeps < 1) throw ArgumentError("substep count must be at least 1");
    for (std::size_t q = 0; q < t1.size(); ++q)
        if (!(t1[q] > 0) || !(t2[q] > 0)) throw ArgumentError("T1/T2 must be positive");
}

bool NoiseSpec::qubit_is_noisy(int q) const {
    if (q < 0 || q >= n_qubits()) return false;
    return std::isfinite(t1[q]) || std::isfinite(t2[q]);
}

NoiseSpec NoiseSpec::with_appended(double t1q, double t2q) const {
    NoiseSpec out = *this;
    out.t1.push_back(t1q);
    out.t2.push_back(t2q);
    return out;
}

NoiseSpec uniform_noise(int n, double t1, double t2, double gate_time, int substeps) {
    NoiseSpec spec;
    spec.t1.assign(n, t1);
    spec.t2.assign(n, t2);
    spec.gate_time = gate_time;
    spec.substeps = substeps;
    spec.validate();
    return spec;
}

NoiseSpec noiseless(int n, double gate_time, int substeps) {
    return uniform_noise(n, kInfTime, kInfTime, gate_time, substeps);
}

std::pair<double, double> substep_probs(const NoiseSpec& spec, int qubit) {
    if (qubit < 0 || qubit >= spec.n_qubits()) throw ArgumentError("qubit outside noise spec");
    const double dt = spec.dt();
    const double p_decay = -std::expm1(-dt / spec.t1[qubit]);
    const double p_dephase = -std::expm1(-dt / spec.t2[qubit]);
    return {p_decay, p_dephase};
}

void apply_amplitude_damping(DensityState& state, int qubit, double p_decay) {
    if (p_decay < 0 || p_decay > 1) throw ArgumentError("decay probability outside [0,1]");
    if (qubit < 0 || qubit >= state.n_qubits) throw ArgumentError("qubit index out of range");
    if (p_decay == 0) return;
    const long dim = state.dim();
    const long bit = 1l << bit_position(qubit, state.n_qubits);
    const double s = std::sqrt(1.0 - p_decay);
    cplx* d = state.rho.data();
    for (long j = 0; j < dim; ++j) {
        if (j & bit) continue;
        const long jb = j | bit;
        cplx* c0 = d + j * dim;
        cplx* c1 = d + jb * dim;
        for (long i = 0; i < dim; ++i) {
            if (i & bit) continue;
            const long ib = i | bit;
            c0[i] += p_decay * c1[ib];
            c1[i] *= s;
            c0[ib] *= s;
            c1[ib] *= 1.0 - p_decay;
        }
    }
}

void apply_dephasing(DensityState& state, int qubit, double p_dephase) {
    if (p_dephase < 0 || p_dephase > 1) throw ArgumentError("dephase probability outside [0,1]");
    if (qubit < 0 || qubit >= state.n_qubits) throw ArgumentError("qubit index out of range");
    if (p_dephase == 0) return;
    const long dim = state.dim();
    const long bit = 1l << bit_position(qubit, state.n_qubits);
    const double f = 1.0 - p_dephase;
    cplx* d = state.rho.data();
    for (long j = 0; j < dim; ++j) {
        cplx* col = d + j * dim;
        for (long i = 0; i < dim; ++i)
            if ((i ^ j) & bit) col[i] *= f;
    }
}

void apply_depolarizing(DensityState& state, int qubit, double p) {
    if (p < 0 || p > 1) throw ArgumentError("depolarizing probability outside [0,1]");
    if (qubit < 0 || qubit >= state.n_qubits) throw ArgumentError("qubit index out of range");
    if (p == 0) return;
    const long dim = state.dim();
    const long bit = 1l << bit_position(qubit, state.n_qubits);
    const double diag_keep = 1.0 - 2.0 * p / 3.0;
    const double diag_mix = 2.0 * p / 3.0;
    const double off = 1.0 - 4.0 * p / 3.0;
    cplx* d = state.rho.data();
    for (long j = 0; j < dim; ++j) {
        if (j & bit) continue;
        const long jb = j | bit;
        cplx* c0 = d + j * dim;
        cplx* c1 = d + jb * dim;
        for (long i = 0; i < dim; ++i) {
            if (i & bit) continue;
            const long ib = i | bit;
            const cplx r00 = c0[i], r11 = c1[ib];
            c0[i] = diag_keep * r00 + diag_mix * r11;
            c1[ib] = diag_keep * r11 + diag_mix * r00;
            c0[ib] *= off;
            c1[i] *= off;
        }
    }
}

void decohere_all(DensityState& state, const NoiseSpec& spec, std::span<const int> active) {
    for (int q : active) {
        const auto [p_decay, p_dephase] = substep_probs(spec, q);
        if (p_decay > 0) apply_amplitude_damping(state, q, p_decay);
        if (p_dephase > 0) apply_dephasing(state, q, p_dephase);
    }
}

double worst_case_gate_fidelity(const NoiseSpec& spec, NoiseKind kind, int qubit) {
    if (qubit < 0 || qubit >= spec.n_qubits()) throw ArgumentError("qubit outside noise spec");
    NoiseSpec one = uniform_noise(1, spec.t1[qubit], spec.t2[qubit], spec.gate_time, spec.substeps);
    DensityState s = new_state(1, "0");
    Vec psi(2);
    if (kind == NoiseKind::Dephasing) {
        psi << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
        s.rho = psi * psi.adjoint();
    } else {
        psi << 0.0, 1.0;
        s.rho = psi * psi.adjoint();
    }
    const int active[] = {0};
    for (int i = 0; i < one.substeps; ++i) decohere_all(s, one, active);
    return fidelity_with_pure(s, psi);
}

double t2_ratio_for_fidelity(double wc_fidelity) {
    if (!(wc_fidelity > std::sqrt(0.5) && wc_fidelity <= 1.0))
        throw ArgumentError("worst-case dephasing fidelity must be in (sqrt(1/2), 1]");
    if (wc_fidelity == 1.0) return kInfTime;
    // F = sqrt((1 + exp(-Tg/T2)) / 2)  =>  T2/Tg = -1 / ln(2 F^2 - 1)
    return -1.0 / std::log(2.0 * wc_fidelity * wc_fidelity - 1.0);
}

}  // namespace qlps
