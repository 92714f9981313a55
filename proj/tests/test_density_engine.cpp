#include <doctest.h>

#include "qlps/density_engine.hpp"
#include "test_util.hpp"

using namespace qlps;
using namespace qlps::testing;

TEST_SUITE_BEGIN("density_engine");

TEST_CASE("new_state builds basis projectors") {
    auto s1 = new_state(1, "0");
    CHECK(s1.rho(0, 0) == cplx(1, 0));
    CHECK(s1.rho(1, 1) == cplx(0, 0));

    auto s2 = new_state(2, "10");
    CHECK(s2.dim() == 4);
    CHECK(s2.rho(2, 2) == cplx(1, 0));
    CHECK(s2.rho.cwiseAbs().sum() == doctest::Approx(1.0));

    auto s6 = new_state(6, "000000");
    CHECK(s6.dim() == 64);
    CHECK(s6.rho(0, 0) == cplx(1, 0));
    CHECK(s6.trace_log.empty());
}

TEST_CASE("new_state enforces the register cap and argument checks") {
    CHECK_THROWS_AS(new_state(9, "000000000"), CapacityError);
    CHECK_NOTHROW(new_state(9, "000000000", 10));
    CHECK_THROWS_AS(new_state(2, "0"), ArgumentError);
    CHECK_THROWS_AS(new_state(1, "2"), ArgumentError);
}

TEST_CASE("embed places single-qubit operators") {
    const int t0[] = {0};
    Mat z = embed(pauli_z(), t0, 1);
    CHECK(max_abs_diff(z, pauli_z()) == 0.0);

    const int t1[] = {1};
    Mat ix = embed(pauli_x(), t1, 2);
    CHECK(max_abs_diff(ix, kron(pauli_i(), pauli_x())) == 0.0);
}

TEST_CASE("embed of CNOT matches the brute-force permutation") {
    Mat cnot(4, 4);
    cnot << 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0;
    const int targets[] = {0, 1};
    Mat full = embed(cnot, targets, 3);
    // Oracle: enumerate the action on all 8 basis states directly.
    Mat oracle = Mat::Zero(8, 8);
    for (long i = 0; i < 8; ++i) {
        int b0 = (i >> 2) & 1, b1 = (i >> 1) & 1, b2 = i & 1;
        int out = (b0 << 2) | ((b1 ^ b0) << 1) | b2;
        oracle(out, i) = 1.0;
    }
    CHECK(max_abs_diff(full, oracle) < 1e-15);
}

TEST_CASE("embed on permuted targets transposes the operator") {
    std::mt19937_64 rng(11);
    Mat u = random_unitary(4, rng);
    const int normal[] = {1, 0};
    const int swapped[] = {0, 1};
    Mat swap(4, 4);
    swap << 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1;
    CHECK(max_abs_diff(embed(u, normal, 2), embed(Mat(swap * u * swap), swapped, 2)) < 1e-14);
}

TEST_CASE("embed validates targets") {
    const int dup[] = {0, 0};
    CHECK_THROWS_AS(embed(Mat::Identity(4, 4), dup, 2), ArgumentError);
    const int oob[] = {3};
    CHECK_THROWS_AS(embed(pauli_x(), oob, 2), ArgumentError);
}

TEST_CASE("apply_unitary basics") {
    auto s = new_state(1, "0");
    apply_unitary(s, pauli_i());
    CHECK(s.rho(0, 0).real() == doctest::Approx(1.0));

    apply_unitary(s, pauli_x());
    CHECK(s.rho(1, 1).real() == doctest::Approx(1.0));

    auto h = new_state(1, "0");
    apply_unitary(h, hadamard());
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) CHECK(h.rho(i, j).real() == doctest::Approx(0.5));
}

TEST_CASE("apply_unitary preserves trace, Hermiticity and the trace log") {
    std::mt19937_64 rng(42);
    auto s = random_state(3, rng);
    s.trace_log = {0.5};
    Mat u = random_unitary(8, rng);
    const double tr_before = s.rho.trace().real();
    apply_unitary(s, u);
    CHECK(std::abs(s.rho.trace().real() - tr_before) < 1e-12);
    CHECK(is_hermitian(s.rho, 1e-10));
    CHECK(s.trace_log == std::vector<double>{0.5});
    CHECK_THROWS_AS(apply_unitary(s, Mat::Identity(4, 4)), ArgumentError);
}

TEST_CASE("apply_local_operator agrees with embed + apply_unitary") {
    std::mt19937_64 rng(7);
    for (auto targets : std::vector<std::vector<int>>{{0}, {2}, {1, 3}, {3, 0}, {2, 0, 3}}) {
        auto s = random_state(4, rng);
        auto reference = s;
        Mat u = random_unitary(1 << targets.size(), rng);
        apply_local_operator(s, u, targets);
        apply_unitary(reference, embed(u, targets, 4));
        CHECK(max_abs_diff(s.rho, reference.rho) < 1e-12);
    }
}

TEST_CASE("apply_local_operator handles whole-register operators") {
    std::mt19937_64 rng(8);
    auto s = random_state(2, rng);
    auto reference = s;
    Mat u = random_unitary(4, rng);
    const int natural[] = {0, 1};
    apply_local_operator(s, u, natural);
    apply_unitary(reference, u);
    CHECK(max_abs_diff(s.rho, reference.rho) < 1e-13);
}

TEST_CASE("partial_trace on product and entangled states") {
    auto prod = tensor(new_state(1, "0"), new_state(1, "1"));
    const int first[] = {0};
    auto left = partial_trace(prod, first);
    CHECK(left.rho(0, 0).real() == doctest::Approx(1.0));

    // Bell state.
    DensityState bell;
    bell.n_qubits = 2;
    Vec v = Vec::Zero(4);
    v(0) = v(3) = 1.0 / std::sqrt(2.0);
    bell.rho = v * v.adjoint();
    for (int q = 0; q < 2; ++q) {
        const int keep[] = {q};
        auto r = partial_trace(bell, keep);
        CHECK(max_abs_diff(r.rho, Mat(pauli_i() / 2.0)) < 1e-14);
    }
}

TEST_CASE("partial_trace preserves trace against direct summation") {
    std::mt19937_64 rng(3);
    auto s = random_state(3, rng);
    const int keep[] = {0, 1};
    auto r = partial_trace(s, keep);
    CHECK(r.rho.trace().real() == doctest::Approx(1.0).epsilon(1e-12));
    // Oracle: diagonal of the reduced state by direct summation.
    for (int a = 0; a < 4; ++a) {
        double direct = 0;
        for (int rest = 0; rest < 2; ++rest) direct += s.rho((a << 1) | rest, (a << 1) | rest).real();
        CHECK(r.rho(a, a).real() == doctest::Approx(direct).epsilon(1e-12));
    }
    CHECK_THROWS_AS(partial_trace(s, std::span<const int>{}), ArgumentError);
}

TEST_CASE("partial_trace then re-tensoring keeps total trace") {
    std::mt19937_64 rng(5);
    auto s = random_state(3, rng);
    const int keep[] = {1, 2};
    auto r = partial_trace(s, keep);
    CHECK(std::abs(r.rho.trace().real() - s.rho.trace().real()) < 1e-12);
}

TEST_CASE("project records the retained trace and renormalizes") {
    auto s = new_state(1, "0");
    apply_unitary(s, hadamard());  // |+>
    Mat p0 = Mat::Zero(2, 2);
    p0(0, 0) = 1.0;

    SUBCASE("identity projector is free") {
        double ps = project(s, Mat::Identity(2, 2));
        CHECK(ps == doctest::Approx(1.0));
        CHECK(s.trace_log.size() == 1);
    }
    SUBCASE("half-weight projection") {
        double ps = project(s, p0);
        CHECK(ps == doctest::Approx(0.5));
        CHECK(s.rho(0, 0).real() == doctest::Approx(1.0));
        CHECK(s.rho.trace().real() == doctest::Approx(1.0));
    }
    SUBCASE("successive projections compose in the log") {
        // Two projections retaining 0.9 then 0.8, built from rotated states.
        DensityState t;
        t.n_qubits = 1;
        t.rho = Mat::Zero(2, 2);
        t.rho(0, 0) = 0.9;
        t.rho(1, 1) = 0.1;
        project(t, p0);
        t.rho = Mat::Zero(2, 2);
        t.rho(0, 0) = 0.8;
        t.rho(1, 1) = 0.2;
        project(t, p0);
        REQUIRE(t.trace_log.size() == 2);
        CHECK(t.trace_log[0] == doctest::Approx(0.9));
        CHECK(t.trace_log[1] == doctest::Approx(0.8));
    }
    SUBCASE("impossible branch") {
        auto z = new_state(1, "1");
        CHECK_THROWS_AS(project(z, p0), ImpossibleBranchError);
    }
    SUBCASE("non-projector rejected") {
        CHECK_THROWS_AS(project(s, hadamard()), ArgumentError);
    }
}

TEST_CASE("project is idempotent") {
    std::mt19937_64 rng(9);
    auto s = random_state(2, rng);
    Mat p = Mat::Zero(4, 4);
    p(0, 0) = p(1, 1) = 1.0;
    project(s, p);
    double ps2 = project(s, p);
    CHECK(ps2 == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("project preserves Hermiticity and positivity") {
    std::mt19937_64 rng(13);
    auto s = random_state(2, rng);
    Mat p = Mat::Zero(4, 4);
    p(0, 0) = p(2, 2) = 1.0;
    project(s, p);
    CHECK(is_hermitian(s.rho, 1e-10));
    Eigen::SelfAdjointEigenSolver<Mat> es(s.rho);
    CHECK(es.eigenvalues().minCoeff() > -1e-10);
}

TEST_CASE("embed is a homomorphism on shared targets") {
    std::mt19937_64 rng(17);
    const int targets[] = {0, 2};
    Mat a = random_unitary(4, rng), b = random_unitary(4, rng);
    CHECK(max_abs_diff(embed(Mat(a * b), targets, 3),
                       Mat(embed(a, targets, 3) * embed(b, targets, 3))) < 1e-13);
}

TEST_SUITE_END();
