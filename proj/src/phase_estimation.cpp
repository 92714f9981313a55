#include "qlps/phase_estimation.hpp"

#include <cmath>
#include <sstream>

namespace qlps {

namespace {

constexpr int kLogicalSensor = 5;  // register layout: block 0..4, sensor 5

double wrap_turn(double x) { return x - std::floor(x); }

}  // namespace

void QpeConfig::validate() const {
    if (m < 1) throw ArgumentError("precision must be at least one digit");
    if (repeats < 1 || repeats % 2 == 0) throw ArgumentError("repeats must be odd");
    if (lps_every < 1) throw ArgumentError("lps_every must be at least 1");
    if (ancilla == AncillaKind::Physical && lps_enabled)
        throw ArgumentError("LPS requires a logical ancilla");
    const bool z_axis = signal.axis == Axis::Z;
    const bool z_sensor = signal.sensor_init == SensorState::Zero ||
                          signal.sensor_init == SensorState::One;
    if (z_axis != z_sensor)
        throw ArgumentError("sensor initial state must be an eigenstate of the signal axis");
}

Vec sensor_vector(SensorState s) {
    Vec v(2);
    const double r = 1.0 / std::sqrt(2.0);
    switch (s) {
        case SensorState::Zero: v << 1, 0; break;
        case SensorState::One: v << 0, 1; break;
        case SensorState::Plus: v << r, r; break;
        case SensorState::Minus: v << r, -r; break;
    }
    return v;
}

DensityState sensor_state(SensorState s) {
    DensityState d;
    d.n_qubits = 1;
    const Vec v = sensor_vector(s);
    d.rho = v * v.adjoint();
    return d;
}

double signal_gadget_angle(const SignalSpec& signal) {
    // R_z(a)|1> = e^{+ia/2}|1>, R_z(a)|0> = e^{-ia/2}|0>,
    // R_x(a)|+> = e^{-ia/2}|+>, R_x(a)|-> = e^{+ia/2}|->.
    const double base = 2.0 * signal.theta;
    switch (signal.sensor_init) {
        case SensorState::One: return base;
        case SensorState::Zero: return -base;
        case SensorState::Plus: return -base;
        case SensorState::Minus: return base;
    }
    return base;
}

const CodeBlock& qpe_code_block() {
    static const CodeBlock block = build_code({0, 1, 2, 3, 4});
    return block;
}

namespace {

NoiseSpec iteration_noise(const QpeConfig& cfg, int n_ancilla_qubits) {
    NoiseSpec spec;
    spec.t1.assign(n_ancilla_qubits, cfg.noise.t1_ancilla);
    spec.t2.assign(n_ancilla_qubits, cfg.noise.t2_ancilla);
    spec.t1.push_back(cfg.noise.t1_sensor);
    spec.t2.push_back(cfg.noise.t2_sensor);
    spec.gate_time = cfg.noise.gate_time;
    spec.substeps = cfg.noise.substeps;
    return spec;
}

std::vector<int> all_qubits(int n) {
    std::vector<int> q(n);
    for (int i = 0; i < n; ++i) q[i] = i;
    return q;
}

struct IterationOut {
    double p0 = 0, p1 = 0;         // conditional on surviving post-selections
    double survival = 1;
    DensityState s0, s1;           // sensor-only collapsed states
    DensityState pre_measurement;  // full register before the ancilla readout
};

// One phase-estimation iteration for digit k: H - controlled-U^(2^(k-1)) -
// [K] - [R_z(omega)] - H - [LPS] - [SPS] - measure.
IterationOut run_iteration(const QpeConfig& cfg, const DensityState& sensor_rho, int k,
                           double omega, bool apply_k_s, bool lps_this_iteration,
                           EvolutionCache* cache) {
    IterationOut out;
    const double angle = signal_gadget_angle(cfg.signal);
    const bool logical = cfg.ancilla == AncillaKind::Logical;

    if (!logical) {
        const int anc = 0, sensor = 1;
        DensityState anc0 = new_state(1, "0");
        DensityState state = tensor(anc0, sensor_rho);
        const auto log_before = state.trace_log.size();
        NoiseSpec spec = iteration_noise(cfg, 1);
        const auto active = all_qubits(2);

        Circuit c(2);
        c.append(gate_h(anc));
        c.append(controlled_signal(anc, sensor, k - 1, angle, cfg.signal.axis, cfg.accelerated));
        if (apply_k_s) c.append(gate_s(anc));
        if (omega != 0.0) c.append(gate_rz(anc, omega));
        c.append(gate_h(anc));
        run_circuit(state, c, spec, active, cache);

        if (cfg.sps_enabled) {
            const Vec v = sensor_vector(cfg.signal.sensor_init);
            const int t[] = {sensor};
            project_local(state, Mat(v * v.adjoint()), t);
        }
        double surv = 1;
        for (auto i = log_before; i < state.trace_log.size(); ++i) surv *= state.trace_log[i];
        out.survival = surv;
        out.pre_measurement = state;

        const int anc_list[] = {anc};
        const int keep[] = {sensor};
        for (auto& br : branch_distribution(state, anc_list)) {
            auto& slot = br.outcome[0] == 0 ? out.s0 : out.s1;
            auto& prob = br.outcome[0] == 0 ? out.p0 : out.p1;
            prob = br.probability;
            slot = partial_trace(br.state, keep);
        }
        return out;
    }

    const CodeBlock& block = qpe_code_block();
    const int sensor = kLogicalSensor;
    DensityState blk;
    blk.n_qubits = 5;
    blk.rho = block.codeword0 * block.codeword0.adjoint();
    DensityState state = tensor(blk, sensor_rho);
    const auto log_before = state.trace_log.size();
    NoiseSpec spec = iteration_noise(cfg, 5);
    const auto active = all_qubits(6);

    Circuit c(6);
    c.append(logical_h(block, cfg.depths.h));
    if (cfg.accelerated) {
        c.append(logical_controlled_rotation(block, sensor, std::ldexp(angle, k - 1),
                                             cfg.signal.axis));
    } else {
        for (long rep = 0; rep < (1l << (k - 1)); ++rep)
            c.append(logical_controlled_rotation(block, sensor, angle, cfg.signal.axis));
    }
    if (apply_k_s) c.append(logical_rz(block, kPi / 2.0, cfg.depths.rz));
    if (omega != 0.0) c.append(logical_rz(block, omega, cfg.depths.rz));
    c.append(logical_h(block, cfg.depths.h));
    run_circuit(state, c, spec, active, cache);

    if (cfg.lps_enabled && lps_this_iteration) {
        SyndromeOptions opt;
        opt.mode = cfg.lps_mode;
        opt.parallel_ancillas = cfg.lps_parallel;
        opt.ancilla = {cfg.noise.t1_ancilla, cfg.noise.t2_ancilla};
        opt.max_qubits = cfg.max_qubits;
        lps(state, block, spec, active, opt, cache);
    }
    if (cfg.sps_enabled) {
        const Vec v = sensor_vector(cfg.signal.sensor_init);
        const int t[] = {sensor};
        project_local(state, Mat(v * v.adjoint()), t);
    }
    double surv = 1;
    for (auto i = log_before; i < state.trace_log.size(); ++i) surv *= state.trace_log[i];
    out.survival = surv;
    out.pre_measurement = state;

    const int keep[] = {sensor};
    auto branches = measure_logical_z(state, block);
    out.p0 = branches[0].probability;
    out.p1 = branches[1].probability;
    if (out.p0 > 0) out.s0 = partial_trace(branches[0].state, keep);
    if (out.p1 > 0) out.s1 = partial_trace(branches[1].state, keep);
    return out;
}

}  // namespace

KitaevIteration kitaev_iteration(const QpeConfig& cfg, int k, KGate kgate,
                                 EvolutionCache* cache) {
    cfg.validate();
    if (k < 1 || k > cfg.m) throw ArgumentError("digit index outside [1, m]");
    EvolutionCache local;
    auto out = run_iteration(cfg, sensor_state(cfg.signal.sensor_init), k, 0.0,
                             kgate == KGate::S, true, cache ? cache : &local);
    KitaevIteration res;
    const double total = out.p0 + out.p1;
    if (!(total > 0)) throw ImpossibleBranchError("all measurement weight post-selected away");
    res.p0 = out.p0 / total;
    res.lost_info = 1.0 - out.survival;
    res.pre_measurement = std::move(out.pre_measurement);
    return res;
}

KitaevEstimate kitaev_estimator(std::span<const double> alphas, int m) {
    if (static_cast<int>(alphas.size()) != m) throw ArgumentError("need one alpha per digit");
    for (double a : alphas)
        if (a < 0 || a >= 1) throw ArgumentError("alpha estimates must lie in [0,1)");
    KitaevEstimate est;
    est.bits.assign(m + 2, 0);
    // Digit m plus the two guard digits come from the closest octant.
    const int octant = static_cast<int>(std::llround(alphas[m - 1] * 8.0)) & 7;
    est.bits[m - 1] = (octant >> 2) & 1;
    est.bits[m] = (octant >> 1) & 1;
    est.bits[m + 1] = octant & 1;
    for (int j = m - 1; j >= 1; --j) {
        const double tail = est.bits[j] / 4.0 + est.bits[j + 1] / 8.0;  // 0.0 b_{j+1} b_{j+2}
        const double d0 = circular_distance(tail, alphas[j - 1]);
        const double d1 = circular_distance(tail + 0.5, alphas[j - 1]);
        if (d0 < 0.25)
            est.bits[j - 1] = 0;
        else if (d1 < 0.25)
            est.bits[j - 1] = 1;
        else
            throw EstimationFailureError("no consistent digit " + std::to_string(j));
    }
    est.value = 0;
    for (int i = 0; i < m + 2; ++i) est.value += est.bits[i] * std::ldexp(1.0, -(i + 1));
    return est;
}

KitaevRun kitaev_run(const QpeConfig& cfg) {
    cfg.validate();
    KitaevRun run;
    EvolutionCache cache;
    double lost_sum = 0;
    for (int k = 1; k <= cfg.m; ++k) {
        const auto it_i = kitaev_iteration(cfg, k, KGate::I, &cache);
        const auto it_s = kitaev_iteration(cfg, k, KGate::S, &cache);
        run.p_i.push_back(it_i.p0);
        run.p_s.push_back(it_s.p0);
        lost_sum += it_i.lost_info + it_s.lost_info;
        const double alpha =
            wrap_turn(std::atan2(1.0 - 2.0 * it_s.p0, 2.0 * it_i.p0 - 1.0) / (2.0 * kPi));
        run.alphas.push_back(alpha);
    }
    run.lost_info = lost_sum / (2.0 * cfg.m);
    run.estimate = kitaev_estimator(run.alphas, cfg.m);
    return run;
}

PhaseHistogram ipea_run(const QpeConfig& cfg) {
    cfg.validate();
    PhaseHistogram hist;
    hist.m = cfg.m;
    hist.bins.assign(1l << cfg.m, 0.0);
    EvolutionCache cache;

    // suffix holds already-measured digits x_j at bit (m - j); digits are
    // measured least significant (j = m, largest power) first.
    auto feedback = [&](int k, long suffix) {
        double omega = 0;
        for (int j = k + 1; j <= cfg.m; ++j) {
            const int xj = static_cast<int>((suffix >> (cfg.m - j)) & 1);
            if (xj) omega -= 2.0 * kPi * std::ldexp(1.0, -(j - k + 1));
        }
        return omega;
    };

    auto recurse = [&](auto&& self, const DensityState& sensor_rho, double weight, int k,
                       long suffix) -> void {
        if (k == 0) {
            hist.bins[suffix] += weight;
            return;
        }
        const int iteration = cfg.m - k + 1;  // 1-based, least significant digit first
        const bool lps_now = cfg.lps_enabled && iteration % cfg.lps_every == 0;
        auto out = run_iteration(cfg, sensor_rho, k, feedback(k, suffix),
                                 /*apply_k_s=*/false, lps_now, &cache);
        hist.lost_info += weight * (1.0 - out.survival);
        auto [q0, q1] = majority_vote_update(out.p0, out.p1, cfg.repeats);
        const double w0 = weight * out.survival * q0;
        const double w1 = weight * out.survival * q1;
        if (w0 > cfg.prune)
            self(self, out.s0, w0, k - 1, suffix);
        else
            hist.pruned_mass += w0;
        if (w1 > cfg.prune)
            self(self, out.s1, w1, k - 1, suffix | (1l << (cfg.m - k)));
        else
            hist.pruned_mass += w1;
    };
    recurse(recurse, sensor_state(cfg.signal.sensor_init), 1.0, cfg.m, 0);

    if (hist.pruned_mass > cfg.pruned_mass_bound)
        throw AccuracyError("pruned branch mass " + std::to_string(hist.pruned_mass) +
                            " exceeds the configured bound");
    return hist;
}

ReducedTwoQubit reduced_two_qubit(const DensityState& state, const CodeBlock& block, int sensor) {
    const int n = state.n_qubits;
    if (n != 6) throw ArgumentError("reduction expects a block+sensor register");
    Vec basis[4];
    for (int x = 0; x < 2; ++x) {
        const Vec& cw = x == 0 ? block.codeword0 : block.codeword1;
        for (int y = 0; y < 2; ++y) {
            Vec v = Vec::Zero(state.dim());
            for (int a = 0; a < 32; ++a) {
                long idx = 0;
                for (int q = 0; q < 5; ++q)
                    if ((a >> (4 - q)) & 1) idx |= 1l << bit_position(block.qubits[q], n);
                if (y) idx |= 1l << bit_position(sensor, n);
                v(idx) = cw(a);
            }
            basis[2 * x + y] = v;
        }
    }
    ReducedTwoQubit out;
    out.raw = Mat(4, 4);
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) out.raw(r, c) = (basis[r].adjoint() * state.rho * basis[c])(0);
    out.trace = out.raw.trace().real();
    out.normalized = out.trace > 0 ? Mat(out.raw / out.trace) : out.raw;
    return out;
}

std::string histogram_csv(const PhaseHistogram& hist) {
    std::ostringstream os;
    os.precision(17);
    os << "bin,label,probability\n";
    for (std::size_t j = 0; j < hist.bins.size(); ++j) {
        os << j << ",";
        for (int b = hist.m - 1; b >= 0; --b) os << ((j >> b) & 1);
        os << "," << hist.bins[j] << "\n";
    }
    return os.str();
}

}  // namespace qlps
