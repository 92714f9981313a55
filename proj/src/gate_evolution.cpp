#include "qlps/gate_evolution.hpp"

#include <cmath>
#include <cstdio>
#include <set>

namespace qlps {

namespace {

Mat proj1() {
    Mat p(2, 2);
    p << 0, 0, 0, 1;
    return p;
}

// (pi/2)(I - W) generates any involution W: exp(i pi/2 (I - W)) = W.
Mat involution_generator(const Mat& w) {
    return (kPi / 2.0) * (Mat::Identity(w.rows(), w.cols()) - w);
}

void check_step_targets(const GateStep& step) {
    std::set<int> seen;
    for (const auto& g : step.gates)
        for (int q : g.targets)
            if (!seen.insert(q).second)
                throw ArgumentError("gate-step has overlapping targets on qubit " +
                                    std::to_string(q));
}

}  // namespace

Mat gate_unitary(const Gate& g) { return expm_i_hermitian(g.generator); }

void Circuit::append(Gate g) {
    GateStep step;
    step.gates.push_back(std::move(g));
    append(std::move(step));
}

void Circuit::append(GateStep step) {
    check_step_targets(step);
    for (const auto& g : step.gates)
        for (int q : g.targets)
            if (q < 0 || q >= n_qubits) throw ArgumentError("gate target outside register");
    steps.push_back(std::move(step));
}

void Circuit::append(std::vector<GateStep> fragment) {
    for (auto& s : fragment) append(std::move(s));
}

Gate gate_identity(int q) { return {"I", {q}, Mat::Zero(2, 2)}; }
Gate gate_x(int q) { return {"X", {q}, involution_generator(pauli_x())}; }
Gate gate_y(int q) { return {"Y", {q}, involution_generator(pauli_y())}; }
Gate gate_z(int q) { return {"Z", {q}, involution_generator(pauli_z())}; }
Gate gate_h(int q) { return {"H", {q}, involution_generator(hadamard())}; }

Gate gate_s(int q) {
    // diag(1, i) = exp(i (pi/4)(I - Z))
    return {"S", {q}, (kPi / 4.0) * (Mat::Identity(2, 2) - pauli_z())};
}

Gate gate_rx(int q, double theta) { return {"RX", {q}, (-theta / 2.0) * pauli_x()}; }
Gate gate_rz(int q, double theta) { return {"RZ", {q}, (-theta / 2.0) * pauli_z()}; }

Gate gate_cnot(int control, int target) {
    return {"CNOT", {control, target}, kron(proj1(), involution_generator(pauli_x()))};
}

Gate gate_cz(int control, int target) {
    return {"CZ", {control, target}, kron(proj1(), involution_generator(pauli_z()))};
}

Gate gate_crx(int control, int target, double theta) {
    return {"CRX", {control, target}, kron(proj1(), (-theta / 2.0) * pauli_x())};
}

Gate gate_crz(int control, int target, double theta) {
    return {"CRZ", {control, target}, kron(proj1(), (-theta / 2.0) * pauli_z())};
}

Gate standard_gate(const std::string& name, std::span<const int> targets,
                   std::span<const double> params) {
    auto one = [&](auto&& make) {
        if (targets.size() != 1) throw ArgumentError(name + " takes one target");
        return make(targets[0]);
    };
    auto two = [&](auto&& make) {
        if (targets.size() != 2) throw ArgumentError(name + " takes control and target");
        return make(targets[0], targets[1]);
    };
    auto angle = [&]() {
        if (params.size() != 1) throw ArgumentError(name + " takes one angle");
        return params[0];
    };
    if (name == "I") return one(gate_identity);
    if (name == "X") return one(gate_x);
    if (name == "Y") return one(gate_y);
    if (name == "Z") return one(gate_z);
    if (name == "H") return one(gate_h);
    if (name == "S") return one(gate_s);
    if (name == "RX") return gate_rx(one(gate_identity).targets[0], angle());
    if (name == "RZ") return gate_rz(one(gate_identity).targets[0], angle());
    if (name == "CNOT") return two(gate_cnot);
    if (name == "CZ") return two(gate_cz);
    if (name == "CRX") {
        double a = angle();
        return two([&](int c, int t) { return gate_crx(c, t, a); });
    }
    if (name == "CRZ") {
        double a = angle();
        return two([&](int c, int t) { return gate_crz(c, t, a); });
    }
    throw ArgumentError("unknown gate name: " + name);
}

namespace {
std::uint64_t gate_key(const Gate& g, int substeps) {
    std::uint64_t h = fnv1a(g.name.data(), g.name.size());
    h = fnv1a(g.targets.data(), g.targets.size() * sizeof(int), h);
    h = fnv1a(&substeps, sizeof(substeps), h);
    return fnv1a_matrix(g.generator, h);
}
}  // namespace

const Mat& EvolutionCache::substep_unitary(const Gate& g, int substeps) {
    const std::uint64_t key = gate_key(g, substeps);
    auto it = cache_.find(key);
    if (it == cache_.end())
        it = cache_.emplace(key, expm_i_hermitian(g.generator, 1.0 / substeps)).first;
    return it->second;
}

const Mat& EvolutionCache::full_unitary(const Gate& g) {
    const std::uint64_t key = gate_key(g, 0);
    auto it = cache_.find(key);
    if (it == cache_.end()) it = cache_.emplace(key, expm_i_hermitian(g.generator)).first;
    return it->second;
}

void run_gate_step(DensityState& state, const GateStep& step, const NoiseSpec& spec,
                   std::span<const int> active, EvolutionCache* cache) {
    check_step_targets(step);
    spec.validate();
    if (spec.n_qubits() != state.n_qubits)
        throw ArgumentError("noise spec does not cover the register");

    std::vector<int> noisy;
    for (int q : active)
        if (spec.qubit_is_noisy(q)) noisy.push_back(q);

    EvolutionCache local;
    EvolutionCache& c = cache ? *cache : local;

    if (noisy.empty()) {
        for (const auto& g : step.gates) apply_local_operator(state, c.full_unitary(g), g.targets);
        return;
    }

    bool touches_noisy = false;
    for (const auto& g : step.gates)
        for (int q : g.targets)
            for (int nq : noisy) touches_noisy = touches_noisy || (q == nq);

    if (!touches_noisy) {
        // Noise on spectator qubits commutes with the gates exactly.
        for (int i = 0; i < spec.substeps; ++i) decohere_all(state, spec, noisy);
        for (const auto& g : step.gates) apply_local_operator(state, c.full_unitary(g), g.targets);
        return;
    }

    std::vector<const Mat*> subs;
    subs.reserve(step.gates.size());
    for (const auto& g : step.gates) subs.push_back(&c.substep_unitary(g, spec.substeps));
    for (int i = 0; i < spec.substeps; ++i) {
        decohere_all(state, spec, noisy);
        for (std::size_t gi = 0; gi < step.gates.size(); ++gi)
            apply_local_operator(state, *subs[gi], step.gates[gi].targets);
    }
}

void run_circuit(DensityState& state, const Circuit& circuit, const NoiseSpec& spec,
                 std::span<const int> active, EvolutionCache* cache) {
    if (circuit.n_qubits != state.n_qubits)
        throw ArgumentError("circuit register size does not match state");
    EvolutionCache local;
    EvolutionCache& c = cache ? *cache : local;
    for (const auto& step : circuit.steps) run_gate_step(state, step, spec, active, &c);
}

std::vector<GateStep> controlled_signal(int control, int target, int power, double theta,
                                        Axis axis, bool accelerated) {
    if (power < 0) throw ArgumentError("signal power must be nonnegative");
    auto make = [&](double angle) {
        GateStep s;
        s.gates.push_back(axis == Axis::Z ? gate_crz(control, target, angle)
                                          : gate_crx(control, target, angle));
        return s;
    };
    std::vector<GateStep> out;
    if (accelerated) {
        out.push_back(make(std::ldexp(theta, power)));
    } else {
        const long reps = 1l << power;
        out.reserve(reps);
        for (long i = 0; i < reps; ++i) out.push_back(make(theta));
    }
    return out;
}

std::string dump_circuit(const Circuit& circuit) {
    std::string out;
    char buf[64];
    for (std::size_t si = 0; si < circuit.steps.size(); ++si) {
        std::snprintf(buf, sizeof(buf), "step %zu:", si);
        out += buf;
        for (const auto& g : circuit.steps[si].gates) {
            out += " " + g.name + "[";
            for (std::size_t ti = 0; ti < g.targets.size(); ++ti) {
                if (ti) out += ",";
                out += std::to_string(g.targets[ti]);
            }
            out += "]";
        }
        out += "\n";
    }
    return out;
}

}  // namespace qlps
