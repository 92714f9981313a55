#include "qlps/measurement.hpp"

#include <cmath>
#include <numeric>

namespace qlps {

namespace {

// Zero every row/column whose measured bits disagree with the outcome, in
// place; returns the retained probability. Equivalent to P_m rho P_m for the
// diagonal measurement projector.
double collapse_basis(DensityState& state, const std::map<int, int>& outcomes) {
    const int n = state.n_qubits;
    const long dim = state.dim();
    long mask = 0, want = 0;
    for (auto [q, bit] : outcomes) {
        if (q < 0 || q >= n) throw ArgumentError("measured qubit outside register");
        if (bit != 0 && bit != 1) throw ArgumentError("outcome must be 0 or 1");
        mask |= 1l << bit_position(q, n);
        if (bit) want |= 1l << bit_position(q, n);
    }
    double kept = 0;
    for (long i = 0; i < dim; ++i)
        if ((i & mask) == want) kept += state.rho(i, i).real();
    cplx* d = state.rho.data();
    for (long j = 0; j < dim; ++j) {
        const bool jbad = (j & mask) != want;
        cplx* col = d + j * dim;
        for (long i = 0; i < dim; ++i)
            if (jbad || (i & mask) != want) col[i] = 0;
    }
    return kept;
}

}  // namespace

Mat measurement_projector(const std::map<int, int>& outcomes, int n) {
    const long dim = 1l << n;
    long mask = 0, want = 0;
    for (auto [q, bit] : outcomes) {
        if (q < 0 || q >= n) throw ArgumentError("measured qubit outside register");
        mask |= 1l << bit_position(q, n);
        if (bit) want |= 1l << bit_position(q, n);
    }
    Mat p = Mat::Zero(dim, dim);
    for (long i = 0; i < dim; ++i)
        if ((i & mask) == want) p(i, i) = 1.0;
    return p;
}

DensityState post_select(const DensityState& state, const std::map<int, int>& outcomes,
                         bool trace_out, double floor) {
    DensityState out = state;
    const double ps = collapse_basis(out, outcomes);
    if (ps < floor)
        throw ImpossibleBranchError("post-selected outcome has probability " + std::to_string(ps));
    out.rho /= ps;
    out.trace_log.push_back(std::min(ps, 1.0));
    if (trace_out) {
        std::vector<int> keep;
        for (int q = 0; q < state.n_qubits; ++q)
            if (!outcomes.count(q)) keep.push_back(q);
        if (keep.empty()) throw ArgumentError("cannot trace out the whole register");
        out = partial_trace(out, keep);
    }
    return out;
}

std::vector<double> outcome_probabilities(const DensityState& state,
                                          std::span<const int> qubits) {
    const int n = state.n_qubits;
    const int k = static_cast<int>(qubits.size());
    if (k == 0) throw ArgumentError("need at least one measured qubit");
    std::vector<double> probs(1l << k, 0.0);
    for (long i = 0; i < state.dim(); ++i) {
        long a = 0;
        for (int t = 0; t < k; ++t) a = (a << 1) | basis_bit(i, qubits[t], n);
        probs[a] += state.rho(i, i).real();
    }
    return probs;
}

MeasurementRecord sample_measurement(DensityState& state, std::span<const int> qubits,
                                     std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    return sample_measurement_at(state, qubits, unif(rng));
}

MeasurementRecord sample_measurement_at(DensityState& state, std::span<const int> qubits,
                                        double x) {
    const auto probs = outcome_probabilities(state, qubits);
    double cum = 0;
    long chosen = static_cast<long>(probs.size()) - 1;
    for (std::size_t i = 0; i < probs.size(); ++i) {
        cum += probs[i];
        if (x < cum) {
            chosen = static_cast<long>(i);
            break;
        }
    }
    MeasurementRecord rec;
    rec.qubits.assign(qubits.begin(), qubits.end());
    rec.branch_probability = probs[chosen];
    std::map<int, int> outcomes;
    for (std::size_t t = 0; t < qubits.size(); ++t) {
        int bit = static_cast<int>((chosen >> (qubits.size() - 1 - t)) & 1);
        rec.outcome.push_back(bit);
        outcomes[qubits[t]] = bit;
    }
    const double ps = collapse_basis(state, outcomes);
    state.rho /= ps;
    rec.retained_trace = 1.0;
    for (double v : state.trace_log) rec.retained_trace *= v;
    return rec;
}

std::vector<Branch> branch_distribution(const DensityState& state, std::span<const int> qubits,
                                        double prune) {
    const auto probs = outcome_probabilities(state, qubits);
    std::vector<Branch> out;
    for (std::size_t a = 0; a < probs.size(); ++a) {
        if (!(probs[a] > prune)) continue;
        Branch b;
        b.probability = probs[a];
        std::map<int, int> outcomes;
        for (std::size_t t = 0; t < qubits.size(); ++t) {
            int bit = static_cast<int>((a >> (qubits.size() - 1 - t)) & 1);
            b.outcome.push_back(bit);
            outcomes[qubits[t]] = bit;
        }
        b.state = state;
        const double ps = collapse_basis(b.state, outcomes);
        b.state.rho /= ps;
        out.push_back(std::move(b));
    }
    return out;
}

double lost_information(std::span<const double> trace_log) {
    double prod = 1.0;
    for (double ps : trace_log) {
        if (ps < 0.0 || ps > 1.0) throw ArgumentError("trace log entry outside [0,1]");
        prod *= ps;
    }
    // Telescoping form: sum_i (prod_{k<i} Ps_k) (1 - Ps_i).
    double lost = 0.0, running = 1.0;
    for (double ps : trace_log) {
        lost += running * (1.0 - ps);
        running *= ps;
    }
    if (std::abs(lost - (1.0 - prod)) > 1e-12)
        throw ConstructionError("lost-information forms disagree");
    return 1.0 - prod;
}

std::mt19937_64 rng_stream(std::uint64_t root_seed, std::uint64_t counter) {
    // splitmix64 over (seed, counter) to decorrelate streams.
    std::uint64_t z = root_seed + 0x9e3779b97f4a7c15ull * (counter + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    z = z ^ (z >> 31);
    return std::mt19937_64(z);
}

}  // namespace qlps
