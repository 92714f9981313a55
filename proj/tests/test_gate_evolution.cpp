#include <doctest.h>

#include "qlps/gate_evolution.hpp"
#include "test_util.hpp"

using namespace qlps;
using namespace qlps::testing;

TEST_SUITE_BEGIN("gate_evolution");

namespace {

Mat canonical(const std::string& name, double theta = 0) {
    Mat m;
    if (name == "X") return pauli_x();
    if (name == "Y") return pauli_y();
    if (name == "Z") return pauli_z();
    if (name == "H") return hadamard();
    if (name == "S") {
        m = Mat::Zero(2, 2);
        m(0, 0) = 1;
        m(1, 1) = cplx(0, 1);
        return m;
    }
    if (name == "RZ") {
        m = Mat::Zero(2, 2);
        m(0, 0) = std::exp(cplx(0, -theta / 2));
        m(1, 1) = std::exp(cplx(0, theta / 2));
        return m;
    }
    if (name == "RX") {
        m = Mat(2, 2);
        m << std::cos(theta / 2), cplx(0, -std::sin(theta / 2)), cplx(0, -std::sin(theta / 2)),
            std::cos(theta / 2);
        return m;
    }
    if (name == "CNOT") {
        m = Mat::Zero(4, 4);
        m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = 1;
        return m;
    }
    if (name == "CZ") {
        m = Mat::Identity(4, 4);
        m(3, 3) = -1;
        return m;
    }
    throw std::runtime_error("unknown canonical gate");
}

DensityState run_noiseless(const Circuit& c, DensityState s) {
    auto spec = noiseless(c.n_qubits);
    std::vector<int> active(c.n_qubits);
    for (int i = 0; i < c.n_qubits; ++i) active[i] = i;
    run_circuit(s, c, spec, active);
    return s;
}

}  // namespace

TEST_CASE("standard gates exponentiate to their canonical unitaries") {
    for (auto name : {"X", "Y", "Z", "H", "S", "CNOT", "CZ"}) {
        std::vector<int> t = std::string(name).size() > 1 && std::string(name) != "S"
                                 ? std::vector<int>{0, 1}
                                 : std::vector<int>{0};
        if (std::string(name) == "CZ" || std::string(name) == "CNOT") t = {0, 1};
        auto g = standard_gate(name, t);
        CHECK(max_abs_diff(gate_unitary(g), canonical(name)) < 1e-12);
        CHECK(is_hermitian(g.generator, 1e-12));
    }
}

TEST_CASE("rotation gates") {
    const int t[] = {0};
    auto id = standard_gate("RZ", t, std::vector<double>{0.0});
    CHECK(max_abs_diff(gate_unitary(id), Mat::Identity(2, 2)) < 1e-14);

    const double theta = kPi / 2;
    auto rz = gate_rz(0, theta);
    CHECK(max_abs_diff_up_to_phase(gate_unitary(rz), canonical("RZ", theta)) < 1e-12);
    auto rx = gate_rx(0, 0.7);
    CHECK(max_abs_diff(gate_unitary(rx), canonical("RX", 0.7)) < 1e-12);

    auto crz = gate_crz(0, 1, 0.9);
    Mat expect = Mat::Identity(4, 4);
    expect.block(2, 2, 2, 2) = canonical("RZ", 0.9);
    CHECK(max_abs_diff(gate_unitary(crz), expect) < 1e-12);
}

TEST_CASE("CNOT is an involution and unknown names are rejected") {
    auto g = gate_cnot(0, 1);
    Mat u = gate_unitary(g);
    CHECK(max_abs_diff(Mat(u * u), Mat::Identity(4, 4)) < 1e-13);
    const int t[] = {0};
    CHECK_THROWS_AS(standard_gate("FOO", t), ArgumentError);
}

TEST_CASE("hermitian_generator round-trips random unitaries") {
    std::mt19937_64 rng(51);
    for (int dim : {2, 4, 8}) {
        Mat u = random_unitary(dim, rng);
        Mat g = hermitian_generator(u);
        CHECK(is_hermitian(g, 1e-10));
        CHECK(max_abs_diff(expm_i_hermitian(g), u) < 1e-9);
    }
    CHECK_THROWS_AS(hermitian_generator(Mat::Ones(2, 2)), ConstructionError);
}

TEST_CASE("noiseless gate-step equals the exact composed unitary") {
    std::mt19937_64 rng(53);
    auto s = random_state(3, rng);
    auto reference = s;
    GateStep step;
    step.gates.push_back(gate_h(0));
    step.gates.push_back(gate_rz(2, 1.1));
    auto spec = noiseless(3);
    const int active[] = {0, 1, 2};
    run_gate_step(s, step, spec, active);
    const int t0[] = {0};
    const int t2[] = {2};
    apply_unitary(reference, Mat(embed(hadamard(), t0, 3) *
                                 embed(gate_unitary(gate_rz(2, 1.1)), t2, 3)));
    CHECK(max_abs_diff(s.rho, reference.rho) < 1e-9);
}

TEST_CASE("substepped noisy evolution matches the exact unitary as noise vanishes") {
    // With a noisy qubit in the gate's support the substep loop runs; at
    // negligible noise it must still reproduce the exact gate.
    auto s = new_state(2, "10");
    GateStep step;
    step.gates.push_back(gate_cnot(0, 1));
    auto spec = uniform_noise(2, kInfTime, 1e14, 1.0, 20);
    const int active[] = {0, 1};
    run_gate_step(s, step, spec, active);
    CHECK(s.rho(3, 3).real() == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("empty gate-step") {
    SUBCASE("noiseless: identity") {
        std::mt19937_64 rng(57);
        auto s = random_state(2, rng);
        auto before = s.rho;
        run_gate_step(s, GateStep{}, noiseless(2), std::vector<int>{0, 1});
        CHECK(max_abs_diff(s.rho, before) == 0.0);
    }
    SUBCASE("pure dephasing on |+> decays the off-diagonal by e^-Tg/T2") {
        auto s = new_state(1, "0");
        apply_unitary(s, hadamard());
        auto spec = uniform_noise(1, kInfTime, 5.0, 1.0, 20);
        const int active[] = {0};
        run_gate_step(s, GateStep{}, spec, active);
        CHECK(s.rho(0, 1).real() == doctest::Approx(std::exp(-0.2) * 0.5).epsilon(1e-9));
    }
}

TEST_CASE("overlapping targets are rejected") {
    GateStep step;
    step.gates.push_back(gate_h(0));
    step.gates.push_back(gate_cnot(0, 1));
    auto s = new_state(2, "00");
    CHECK_THROWS_AS(run_gate_step(s, step, noiseless(2), std::vector<int>{0, 1}), ArgumentError);
}

TEST_CASE("gate-step duration accounting over a deep circuit") {
    auto s = new_state(1, "1");
    Circuit c(1);
    for (int i = 0; i < 12; ++i) c.append(GateStep{});
    auto spec = uniform_noise(1, 7.0, kInfTime, 1.0, 20);
    const int active[] = {0};
    run_circuit(s, c, spec, active);
    CHECK(s.rho(1, 1).real() == doctest::Approx(std::exp(-12.0 / 7.0)).epsilon(1e-8));
}

TEST_CASE("noisy CNOT gate-step matches a brute-force substep oracle") {
    // Oracle: embedded-matrix evolution with explicit Kraus channels.
    auto s = new_state(2, "10");
    apply_unitary(s, kron(hadamard(), pauli_i()));
    auto reference = s;

    GateStep step;
    step.gates.push_back(gate_cnot(0, 1));
    auto spec = uniform_noise(2, 4.0, 3.0, 1.0, 5);
    const int active[] = {0, 1};
    run_gate_step(s, step, spec, active);

    const int both[] = {0, 1};
    Mat u_sub = expm_i_hermitian(embed(step.gates[0].generator, both, 2), 1.0 / 5);
    const double pd = 1 - std::exp(-0.2 / 4.0), pp = 1 - std::exp(-0.2 / 3.0);
    Mat e1(2, 2), e2(2, 2);
    e1 << 1, 0, 0, std::sqrt(1 - pd);
    e2 << 0, std::sqrt(pd), 0, 0;
    for (int i = 0; i < 5; ++i) {
        for (int q = 0; q < 2; ++q) {
            const int t[] = {q};
            Mat f1 = embed(e1, t, 2), f2 = embed(e2, t, 2), z = embed(pauli_z(), t, 2);
            reference.rho = f1 * reference.rho * f1.adjoint() + f2 * reference.rho * f2.adjoint();
            reference.rho = (1 - pp / 2) * reference.rho + (pp / 2) * z * reference.rho * z;
        }
        apply_unitary(reference, u_sub);
    }
    CHECK(max_abs_diff(s.rho, reference.rho) < 1e-12);
}

TEST_CASE("controlled signal fragments") {
    SUBCASE("power zero: both modes coincide") {
        auto acc = controlled_signal(0, 1, 0, 0.8, Axis::Z, true);
        auto seq = controlled_signal(0, 1, 0, 0.8, Axis::Z, false);
        REQUIRE(acc.size() == 1);
        REQUIRE(seq.size() == 1);
        CHECK(max_abs_diff(acc[0].gates[0].generator, seq[0].gates[0].generator) == 0.0);
    }
    SUBCASE("accelerated and sequential agree noiselessly up to k = 6") {
        for (int k = 1; k <= 6; ++k) {
            const double theta = 0.37;
            Circuit ca(2), cs(2);
            ca.append(controlled_signal(0, 1, k, theta, Axis::X, true));
            cs.append(controlled_signal(0, 1, k, theta, Axis::X, false));
            auto s0 = new_state(2, "00");
            apply_unitary(s0, kron(hadamard(), hadamard()));
            auto sa = run_noiseless(ca, s0);
            auto ss = run_noiseless(cs, s0);
            CHECK(max_abs_diff(sa.rho, ss.rho) < 1e-9);
        }
    }
    SUBCASE("depth counting: 2^k steps sequential, one accelerated") {
        CHECK(controlled_signal(0, 1, 3, 0.1, Axis::Z, false).size() == 8);
        CHECK(controlled_signal(0, 1, 3, 0.1, Axis::Z, true).size() == 1);
    }
}

TEST_CASE("run_circuit") {
    SUBCASE("depth-0 circuit is the identity") {
        std::mt19937_64 rng(61);
        auto s = random_state(2, rng);
        auto before = s.rho;
        auto out = run_noiseless(Circuit(2), s);
        CHECK(max_abs_diff(out.rho, before) == 0.0);
    }
    SUBCASE("two X steps cancel") {
        Circuit c(1);
        c.append(gate_x(0));
        c.append(gate_x(0));
        auto out = run_noiseless(c, new_state(1, "0"));
        CHECK(out.rho(0, 0).real() == doctest::Approx(1.0));
    }
    SUBCASE("|++> is a CNOT eigenstate through many gates") {
        Circuit c(2);
        for (int i = 0; i < 25; ++i) c.append(gate_cnot(0, 1));
        auto s = new_state(2, "00");
        apply_unitary(s, kron(hadamard(), hadamard()));
        auto expect = s.rho;
        auto out = run_noiseless(c, s);
        CHECK(max_abs_diff(out.rho, expect) < 1e-9);
    }
}

TEST_CASE("circuit dump is one gate-step per line") {
    Circuit c(3);
    GateStep step;
    step.gates.push_back(gate_h(0));
    step.gates.push_back(gate_rz(2, 0.5));
    c.append(step);
    c.append(gate_cnot(0, 1));
    CHECK(dump_circuit(c) == "step 0: H[0] RZ[2]\nstep 1: CNOT[0,1]\n");
}

TEST_SUITE_END();
