#include "qlps/density_engine.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qlps {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw ArgumentError(msg);
}

// Full-register row indices addressed by a local k-qubit pattern: for local
// basis state a, offsets[a] is the contribution of the target bits to the
// register index.
std::vector<long> target_offsets(std::span<const int> targets, int n) {
    const int k = static_cast<int>(targets.size());
    std::vector<long> offsets(1l << k, 0);
    for (long a = 0; a < (1l << k); ++a) {
        long off = 0;
        for (int t = 0; t < k; ++t)
            if ((a >> (k - 1 - t)) & 1) off |= 1l << bit_position(targets[t], n);
        offsets[a] = off;
    }
    return offsets;
}

long targets_mask(std::span<const int> targets, int n) {
    long mask = 0;
    for (int q : targets) mask |= 1l << bit_position(q, n);
    return mask;
}

void validate_targets(std::span<const int> targets, int n) {
    for (std::size_t i = 0; i < targets.size(); ++i) {
        require(targets[i] >= 0 && targets[i] < n, "qubit index out of range");
        for (std::size_t j = i + 1; j < targets.size(); ++j)
            require(targets[i] != targets[j], "duplicate target qubit");
    }
}

}  // namespace

DensityState new_state(int n, std::string_view bits, int max_qubits) {
    require(n >= 1, "register needs at least one qubit");
    if (n > max_qubits)
        throw CapacityError("register of " + std::to_string(n) + " qubits exceeds cap of " +
                            std::to_string(max_qubits));
    require(static_cast<int>(bits.size()) == n, "bit string length must equal qubit count");
    long index = 0;
    for (int q = 0; q < n; ++q) {
        require(bits[q] == '0' || bits[q] == '1', "bit string must contain only 0/1");
        if (bits[q] == '1') index |= 1l << bit_position(q, n);
    }
    DensityState s;
    s.n_qubits = n;
    s.rho = Mat::Zero(1l << n, 1l << n);
    s.rho(index, index) = 1.0;
    return s;
}

Mat embed(const Mat& op, std::span<const int> targets, int n) {
    const int k = static_cast<int>(targets.size());
    require(k >= 1, "embed needs at least one target");
    require(op.rows() == op.cols() && op.rows() == (1l << k),
            "operator dimension must be 2^(number of targets)");
    validate_targets(targets, n);

    const long dim = 1l << n;
    const long mask = targets_mask(targets, n);
    const auto offsets = target_offsets(targets, n);
    // Local pattern of a register index, in target-list order.
    auto local_of = [&](long idx) {
        long a = 0;
        for (int t = 0; t < k; ++t)
            a = (a << 1) | ((idx >> bit_position(targets[t], n)) & 1);
        return a;
    };

    Mat out = Mat::Zero(dim, dim);
    for (long i = 0; i < dim; ++i) {
        const long rest = i & ~mask;
        const long ai = local_of(i);
        for (long b = 0; b < (1l << k); ++b) out(i, rest | offsets[b]) = op(ai, b);
    }
    return out;
}

void apply_unitary(DensityState& state, const Mat& u) {
    require(u.rows() == state.dim() && u.cols() == state.dim(),
            "operator dimension does not match register");
    state.rho = u * state.rho * u.adjoint();
}

void apply_local_operator(DensityState& state, const Mat& u, std::span<const int> targets) {
    const int n = state.n_qubits;
    const int k = static_cast<int>(targets.size());
    validate_targets(targets, n);
    require(u.rows() == u.cols() && u.rows() == (1l << k),
            "operator dimension must be 2^(number of targets)");
    if (u.rows() == state.dim()) {
        // Acting on the whole register: plain conjugation is cheaper.
        bool full = (k == n);
        if (full) {
            // Only when targets are in natural order; otherwise fall through.
            bool natural = true;
            for (int t = 0; t < k; ++t) natural = natural && targets[t] == t;
            if (natural) {
                state.rho = u * state.rho * u.adjoint();
                return;
            }
        }
    }

    const long dim = state.dim();
    const long kk = 1l << k;
    const long mask = targets_mask(targets, n);
    const auto offsets = target_offsets(targets, n);

    // Row pass: rho <- (U x I) rho, done per "rest" pattern with a gathered
    // K x dim block so Eigen can use gemm.
    Mat block(kk, dim);
    for (long rest = 0; rest < dim; ++rest) {
        if (rest & mask) continue;
        for (long a = 0; a < kk; ++a) block.row(a) = state.rho.row(rest | offsets[a]);
        block = u * block;
        for (long a = 0; a < kk; ++a) state.rho.row(rest | offsets[a]) = block.row(a);
    }
    // Column pass: rho <- rho (U x I)^dagger.
    Mat cols(dim, kk);
    for (long rest = 0; rest < dim; ++rest) {
        if (rest & mask) continue;
        for (long a = 0; a < kk; ++a) cols.col(a) = state.rho.col(rest | offsets[a]);
        cols = cols * u.adjoint();
        for (long a = 0; a < kk; ++a) state.rho.col(rest | offsets[a]) = cols.col(a);
    }
}

DensityState partial_trace(const DensityState& state, std::span<const int> keep) {
    const int n = state.n_qubits;
    require(!keep.empty(), "partial_trace needs a nonempty keep list");
    validate_targets(keep, n);

    const int k = static_cast<int>(keep.size());
    const long kept_dim = 1l << k;
    const auto offsets = target_offsets(keep, n);
    const long mask = targets_mask(keep, n);
    const long dim = state.dim();

    DensityState out;
    out.n_qubits = k;
    out.trace_log = state.trace_log;
    out.rho = Mat::Zero(kept_dim, kept_dim);
    for (long rest = 0; rest < dim; ++rest) {
        if (rest & mask) continue;
        for (long a = 0; a < kept_dim; ++a)
            for (long b = 0; b < kept_dim; ++b)
                out.rho(a, b) += state.rho(rest | offsets[a], rest | offsets[b]);
    }
    return out;
}

DensityState tensor(const DensityState& a, const DensityState& b) {
    require(a.trace_log.empty() || b.trace_log.empty(),
            "tensor of two states with projection history is ambiguous");
    DensityState out;
    out.n_qubits = a.n_qubits + b.n_qubits;
    out.rho = kron(a.rho, b.rho);
    out.trace_log = a.trace_log.empty() ? b.trace_log : a.trace_log;
    return out;
}

double project(DensityState& state, const Mat& p, bool record_trace, double floor) {
    require(p.rows() == state.dim() && p.cols() == state.dim(),
            "projector dimension does not match register");
    if ((p * p - p).cwiseAbs().maxCoeff() > 1e-8) throw ArgumentError("operator is not a projector");
    const double before = state.rho.trace().real();
    state.rho = (p * state.rho * p.adjoint()).eval();
    const double after = state.rho.trace().real();
    const double ps = after / before;
    if (ps < floor)
        throw ImpossibleBranchError("post-selected branch has probability " + std::to_string(ps));
    state.rho /= after;
    if (record_trace) state.trace_log.push_back(std::clamp(ps, 0.0, 1.0));
    return ps;
}

double project_local(DensityState& state, const Mat& p, std::span<const int> targets,
                     bool record_trace, double floor) {
    if ((p * p - p).cwiseAbs().maxCoeff() > 1e-8) throw ArgumentError("operator is not a projector");
    const double before = state.rho.trace().real();
    apply_local_operator(state, p, targets);
    const double after = state.rho.trace().real();
    const double ps = after / before;
    if (ps < floor)
        throw ImpossibleBranchError("post-selected branch has probability " + std::to_string(ps));
    state.rho /= after;
    if (record_trace) state.trace_log.push_back(std::clamp(ps, 0.0, 1.0));
    return ps;
}

void check_state(const DensityState& state, double tol) {
    if (!is_hermitian(state.rho, tol)) throw ConstructionError("state is not Hermitian");
    if (std::abs(state.rho.trace().real() - 1.0) > tol)
        throw ConstructionError("state trace drifted from one");
    for (double ps : state.trace_log)
        if (ps < -tol || ps > 1.0 + tol) throw ConstructionError("trace log entry outside [0,1]");
}

double fidelity_with_pure(const DensityState& state, const Vec& psi) {
    require(psi.size() == state.dim(), "vector dimension does not match register");
    const double overlap = (psi.adjoint() * state.rho * psi)(0).real();
    return std::sqrt(std::max(0.0, overlap));
}

}  // namespace qlps
