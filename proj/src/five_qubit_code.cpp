#include "qlps/five_qubit_code.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <sstream>

namespace qlps {

namespace {

struct Term {
    int sign;
    const char* bits;
};

// Basis-state expansions of the codewords, coefficient sign/4 each.
constexpr Term kZeroTerms[16] = {
    {+1, "00000"}, {+1, "10010"}, {+1, "01001"}, {+1, "10100"},
    {+1, "01010"}, {-1, "11011"}, {-1, "00110"}, {-1, "11000"},
    {-1, "11101"}, {-1, "00011"}, {-1, "11110"}, {-1, "01111"},
    {-1, "10001"}, {-1, "01100"}, {-1, "10111"}, {+1, "00101"},
};
constexpr Term kOneTerms[16] = {
    {+1, "11111"}, {+1, "01101"}, {+1, "10110"}, {+1, "01011"},
    {+1, "10101"}, {-1, "00100"}, {-1, "11001"}, {-1, "00111"},
    {-1, "00010"}, {-1, "11100"}, {-1, "00001"}, {-1, "10000"},
    {-1, "01110"}, {-1, "10011"}, {-1, "01000"}, {+1, "11010"},
};

Vec codeword_from_terms(const Term (&terms)[16]) {
    Vec v = Vec::Zero(32);
    for (const auto& t : terms) {
        int idx = 0;
        for (int i = 0; i < 5; ++i) idx = (idx << 1) | (t.bits[i] - '0');
        v(idx) = t.sign / 4.0;
    }
    return v;
}

Pauli5 parse_pauli5(const char* s) {
    Pauli5 p{};
    for (int i = 0; i < 5; ++i) {
        switch (s[i]) {
            case 'I': p[i] = Pauli::I; break;
            case 'X': p[i] = Pauli::X; break;
            case 'Y': p[i] = Pauli::Y; break;
            case 'Z': p[i] = Pauli::Z; break;
            default: throw ArgumentError("bad Pauli letter");
        }
    }
    return p;
}

int hamming_weight(const char* bits) {
    int w = 0;
    for (int i = 0; i < 5; ++i) w += bits[i] - '0';
    return w;
}

}  // namespace

const Mat& pauli_matrix(Pauli p) {
    switch (p) {
        case Pauli::X: return pauli_x();
        case Pauli::Y: return pauli_y();
        case Pauli::Z: return pauli_z();
        default: return pauli_i();
    }
}

Mat pauli5_matrix(const Pauli5& p) {
    Mat m = pauli_matrix(p[0]);
    for (int i = 1; i < 5; ++i) m = kron(m, pauli_matrix(p[i])).eval();
    return m;
}

std::string pauli5_string(const Pauli5& p) {
    std::string s;
    for (Pauli q : p) s += "IXYZ"[static_cast<int>(q)];
    return s;
}

bool anticommutes(Pauli a, Pauli b) {
    return a != Pauli::I && b != Pauli::I && a != b;
}

int syndrome_label_from_raw(int raw) {
    int label = 0, running = 0;
    for (int i = 0; i < 4; ++i) {
        running ^= (raw >> (3 - i)) & 1;
        label = (label << 1) | running;
    }
    return label;
}

int syndrome_raw_from_label(int label) {
    int raw = 0, prev = 0;
    for (int i = 0; i < 4; ++i) {
        const int t = (label >> (3 - i)) & 1;
        raw = (raw << 1) | (t ^ prev);
        prev = t;
    }
    return raw;
}

std::string syndrome_bits(int value) {
    std::string s(4, '0');
    for (int i = 0; i < 4; ++i) s[i] = ((value >> (3 - i)) & 1) ? '1' : '0';
    return s;
}

int syndrome_raw(const CodeBlock& block, const Pauli5& error) {
    int raw = 0;
    for (int g = 0; g < 4; ++g) {
        int anti = 0;
        for (int q = 0; q < 5; ++q) anti ^= anticommutes(block.generators[g][q], error[q]);
        raw = (raw << 1) | anti;
    }
    return raw;
}

int syndrome_label(const CodeBlock& block, const Pauli5& error) {
    return syndrome_label_from_raw(syndrome_raw(block, error));
}

CodeBlock build_code(const std::array<int, 5>& qubits) {
    CodeBlock b;
    b.qubits = qubits;
    b.generators = {parse_pauli5("XZZXI"), parse_pauli5("IXZZX"), parse_pauli5("XIXZZ"),
                    parse_pauli5("ZXIXZ")};
    b.codeword0 = codeword_from_terms(kZeroTerms);
    b.codeword1 = codeword_from_terms(kOneTerms);

    // Stabilizer conditions, orthonormality, parity attribute.
    for (const auto& g : b.generators) {
        const Mat gm = pauli5_matrix(g);
        if ((gm * b.codeword0 - b.codeword0).cwiseAbs().maxCoeff() > 1e-12 ||
            (gm * b.codeword1 - b.codeword1).cwiseAbs().maxCoeff() > 1e-12)
            throw ConstructionError("codeword is not a +1 stabilizer eigenvector");
    }
    if (std::abs(b.codeword0.norm() - 1.0) > 1e-12 || std::abs(b.codeword1.norm() - 1.0) > 1e-12 ||
        std::abs((b.codeword0.adjoint() * b.codeword1)(0)) > 1e-12)
        throw ConstructionError("codewords are not orthonormal");
    for (const auto& t : kZeroTerms)
        if (hamming_weight(t.bits) % 2 != 0) throw ConstructionError("parity attribute violated");
    for (const auto& t : kOneTerms)
        if (hamming_weight(t.bits) % 2 != 1) throw ConstructionError("parity attribute violated");

    // Weight-1 corrections by syndrome label.
    b.correction[0] = parse_pauli5("IIIII");
    bool seen[16] = {true, false};
    for (int q = 0; q < 5; ++q) {
        for (Pauli p : {Pauli::X, Pauli::Y, Pauli::Z}) {
            Pauli5 e{};
            e[q] = p;
            const int label = syndrome_label(b, e);
            if (label == 0 || seen[label])
                throw ConstructionError("weight-1 syndromes are not distinct");
            seen[label] = true;
            b.correction[label] = e;
        }
    }
    for (bool s : seen)
        if (!s) throw ConstructionError("syndrome table does not cover all labels");
    return b;
}

Vec logical_vector(const CodeBlock& block, cplx a, cplx b) {
    Vec v = a * block.codeword0 + b * block.codeword1;
    const double n = v.norm();
    if (n < 1e-300) throw ArgumentError("zero logical vector");
    return v / n;
}

Mat code_projector(const CodeBlock& block) {
    return block.codeword0 * block.codeword0.adjoint() +
           block.codeword1 * block.codeword1.adjoint();
}

Mat syndrome_projector(const CodeBlock& block, int raw) {
    Mat p = Mat::Identity(32, 32);
    for (int g = 0; g < 4; ++g) {
        const double sign = ((raw >> (3 - g)) & 1) ? -1.0 : 1.0;
        p = (p * (Mat::Identity(32, 32) + sign * pauli5_matrix(block.generators[g])) / 2.0).eval();
    }
    return p;
}

Mat code_space_unitary(const CodeBlock& block, const Mat& m2) {
    if (m2.rows() != 2 || m2.cols() != 2 || !is_unitary(m2, 1e-10))
        throw ArgumentError("code-space action must be a 2x2 unitary");
    const Vec& v0 = block.codeword0;
    const Vec& v1 = block.codeword1;
    Mat u = Mat::Identity(32, 32) - code_projector(block);
    u += (m2(0, 0) * v0 + m2(1, 0) * v1) * v0.adjoint();
    u += (m2(0, 1) * v0 + m2(1, 1) * v1) * v1.adjoint();
    return u;
}

Mat encoding_unitary(const CodeBlock& block) {
    Vec w0 = Vec::Zero(64), w1 = Vec::Zero(64);
    w0.head(32) = block.codeword0;
    w1.head(32) = block.codeword1;

    // Columns of U: images of |0,00000> (index 0) and |1,00000> (index 32),
    // completed deterministically by Gram-Schmidt over the standard basis.
    std::vector<Vec> images{w0, w1};
    for (int j = 0; j < 64 && images.size() < 64; ++j) {
        Vec cand = basis_vector(64, j);
        for (const auto& img : images) cand -= (img.adjoint() * cand)(0) * img;
        const double n = cand.norm();
        if (n > 1e-6) images.push_back(cand / n);
    }
    if (images.size() != 64) throw ConstructionError("encoding completion failed");

    Mat u = Mat::Zero(64, 64);
    u.col(0) = images[0];
    u.col(32) = images[1];
    std::size_t next = 2;
    for (int j = 0; j < 64; ++j) {
        if (j == 0 || j == 32) continue;
        u.col(j) = images[next++];
    }
    if (!is_unitary(u, 1e-9)) throw ConstructionError("encoding unitary is not unitary");
    return u;
}

namespace {
std::vector<int> encode_targets(const CodeBlock& block, int source) {
    for (int q : block.qubits)
        if (q == source) throw ArgumentError("source qubit overlaps the code block");
    std::vector<int> t{source};
    t.insert(t.end(), block.qubits.begin(), block.qubits.end());
    return t;
}
}  // namespace

void encode(DensityState& state, const CodeBlock& block, int source) {
    apply_local_operator(state, encoding_unitary(block), encode_targets(block, source));
}

void decode(DensityState& state, const CodeBlock& block, int source) {
    apply_local_operator(state, encoding_unitary(block).adjoint(), encode_targets(block, source));
}

std::array<double, 16> syndrome_probabilities(const DensityState& state, const CodeBlock& block) {
    const DensityState blk = partial_trace(state, block.targets());
    std::array<double, 16> probs{};
    for (int raw = 0; raw < 16; ++raw)
        probs[syndrome_label_from_raw(raw)] =
            (syndrome_projector(block, raw) * blk.rho).trace().real();
    return probs;
}

void collapse_syndrome(DensityState& state, const CodeBlock& block, int label, bool record_trace) {
    project_local(state, syndrome_projector(block, syndrome_raw_from_label(label)),
                  block.targets(), record_trace);
}

namespace {

// One generator-measurement round on a reused ancilla: H, controlled Paulis
// onto the block, H. The ancilla is the last register qubit.
Circuit round_circuit(const CodeBlock& block, int generator, int n, int ancilla) {
    Circuit c(n);
    c.append(gate_h(ancilla));
    for (int q = 0; q < 5; ++q) {
        const Pauli p = block.generators[generator][q];
        if (p == Pauli::I) continue;
        if (p == Pauli::X)
            c.append(gate_cnot(ancilla, block.qubits[q]));
        else if (p == Pauli::Z)
            c.append(gate_cz(ancilla, block.qubits[q]));
        else
            throw ConstructionError("generators of this code contain only X and Z");
    }
    c.append(gate_h(ancilla));
    return c;
}

struct ExtendedRegister {
    DensityState state;
    NoiseSpec spec;
    std::vector<int> active;
    int first_ancilla;
};

ExtendedRegister extend_with_ancillas(const DensityState& state, const NoiseSpec& spec,
                                      std::span<const int> active, const AncillaProfile& anc,
                                      int count, int max_qubits) {
    if (state.n_qubits + count > max_qubits)
        throw CapacityError("syndrome extraction would exceed the register cap");
    ExtendedRegister ext;
    DensityState anc_state;
    anc_state.n_qubits = count;
    anc_state.rho = Mat::Zero(1l << count, 1l << count);
    anc_state.rho(0, 0) = 1.0;
    ext.state = tensor(state, anc_state);
    ext.spec = spec;
    ext.active.assign(active.begin(), active.end());
    for (int i = 0; i < count; ++i) {
        ext.spec = ext.spec.with_appended(anc.t1, anc.t2);
        ext.active.push_back(state.n_qubits + i);
    }
    ext.first_ancilla = state.n_qubits;
    return ext;
}

Circuit parallel_extraction_circuit(const CodeBlock& block, int n, int first_ancilla) {
    Circuit c(n);
    GateStep prep;
    for (int g = 0; g < 4; ++g) prep.gates.push_back(gate_h(first_ancilla + g));
    c.append(prep);
    // Greedy packing of the 16 controlled gates into steps with disjoint qubits.
    struct Item {
        int anc, q;
        Pauli p;
    };
    std::vector<Item> items;
    for (int g = 0; g < 4; ++g)
        for (int q = 0; q < 5; ++q)
            if (block.generators[g][q] != Pauli::I)
                items.push_back({first_ancilla + g, block.qubits[q], block.generators[g][q]});
    std::vector<bool> done(items.size(), false);
    std::size_t remaining = items.size();
    while (remaining > 0) {
        GateStep step;
        std::vector<bool> used(n, false);
        for (std::size_t i = 0; i < items.size(); ++i) {
            if (done[i] || used[items[i].anc] || used[items[i].q]) continue;
            step.gates.push_back(items[i].p == Pauli::X
                                     ? gate_cnot(items[i].anc, items[i].q)
                                     : gate_cz(items[i].anc, items[i].q));
            used[items[i].anc] = used[items[i].q] = true;
            done[i] = true;
            --remaining;
        }
        c.append(std::move(step));
    }
    GateStep unprep;
    for (int g = 0; g < 4; ++g) unprep.gates.push_back(gate_h(first_ancilla + g));
    c.append(unprep);
    return c;
}

}  // namespace

void lps(DensityState& state, const CodeBlock& block, const NoiseSpec& spec,
         std::span<const int> active, const SyndromeOptions& opt, EvolutionCache* cache) {
    if (opt.mode == SyndromeMode::Ideal) {
        project_local(state, syndrome_projector(block, 0), block.targets(), true);
        return;
    }
    if (opt.parallel_ancillas) {
        auto ext = extend_with_ancillas(state, spec, active, opt.ancilla, 4, opt.max_qubits);
        run_circuit(ext.state, parallel_extraction_circuit(block, ext.state.n_qubits,
                                                           ext.first_ancilla),
                    ext.spec, ext.active, cache);
        std::map<int, int> zeros;
        for (int g = 0; g < 4; ++g) zeros[ext.first_ancilla + g] = 0;
        ext.state = post_select(ext.state, zeros, /*trace_out=*/true);
        state = std::move(ext.state);
        return;
    }
    auto ext = extend_with_ancillas(state, spec, active, opt.ancilla, 1, opt.max_qubits);
    const int anc = ext.first_ancilla;
    for (int g = 0; g < 4; ++g) {
        run_circuit(ext.state, round_circuit(block, g, ext.state.n_qubits, anc), ext.spec,
                    ext.active, cache);
        ext.state = post_select(ext.state, {{anc, 0}}, /*trace_out=*/false);
    }
    std::vector<int> keep;
    for (int q = 0; q < state.n_qubits; ++q) keep.push_back(q);
    state = partial_trace(ext.state, keep);
}

std::vector<SyndromeBranch> syndrome_branches(const DensityState& state, const CodeBlock& block,
                                              const NoiseSpec& spec, std::span<const int> active,
                                              const SyndromeOptions& opt, EvolutionCache* cache) {
    std::vector<SyndromeBranch> out;
    if (opt.mode == SyndromeMode::Ideal) {
        const auto probs = syndrome_probabilities(state, block);
        for (int label = 0; label < 16; ++label) {
            if (!(probs[label] > 0)) continue;
            SyndromeBranch br;
            br.label = label;
            br.probability = probs[label];
            br.state = state;
            apply_local_operator(br.state, syndrome_projector(block, syndrome_raw_from_label(label)),
                                 block.targets());
            br.state.rho /= br.state.rho.trace().real();
            out.push_back(std::move(br));
        }
        return out;
    }

    // Sequential reused-ancilla tree: branch on the measured bit after each of
    // the four rounds.
    struct Node {
        DensityState state;
        double prob;
        int raw;
    };
    auto ext = extend_with_ancillas(state, spec, active, opt.ancilla, 1, opt.max_qubits);
    const int anc = ext.first_ancilla;
    std::vector<Node> layer{{std::move(ext.state), 1.0, 0}};
    for (int g = 0; g < 4; ++g) {
        const Circuit rc = round_circuit(block, g, state.n_qubits + 1, anc);
        std::vector<Node> next;
        for (auto& node : layer) {
            run_circuit(node.state, rc, ext.spec, ext.active, cache);
            const int anc_list[] = {anc};
            for (auto& br : branch_distribution(node.state, anc_list)) {
                Node child;
                child.prob = node.prob * br.probability;
                child.raw = (node.raw << 1) | br.outcome[0];
                child.state = std::move(br.state);
                if (br.outcome[0] == 1) {
                    // Classical reset of the reused ancilla.
                    apply_local_operator(child.state, pauli_x(), anc_list);
                }
                next.push_back(std::move(child));
            }
        }
        layer = std::move(next);
    }
    std::vector<int> keep;
    for (int q = 0; q < state.n_qubits; ++q) keep.push_back(q);
    for (auto& node : layer) {
        SyndromeBranch br;
        br.label = syndrome_label_from_raw(node.raw);
        br.probability = node.prob;
        br.state = partial_trace(node.state, keep);
        out.push_back(std::move(br));
    }
    std::sort(out.begin(), out.end(),
              [](const SyndromeBranch& a, const SyndromeBranch& b) { return a.label < b.label; });
    return out;
}

void apply_pauli5(DensityState& state, const CodeBlock& block, const Pauli5& p) {
    for (int q = 0; q < 5; ++q) {
        if (p[q] == Pauli::I) continue;
        const int t[] = {block.qubits[q]};
        apply_local_operator(state, pauli_matrix(p[q]), t);
    }
}

CorrectionRecord error_correct(DensityState& state, const CodeBlock& block, const NoiseSpec& spec,
                               std::span<const int> active, std::mt19937_64& rng,
                               const SyndromeOptions& opt, EvolutionCache* cache) {
    CorrectionRecord rec;
    if (opt.mode == SyndromeMode::Ideal) {
        const auto probs = syndrome_probabilities(state, block);
        std::uniform_real_distribution<double> unif(0.0, 1.0);
        const double x = unif(rng);
        double cum = 0;
        int label = 15;
        for (int l = 0; l < 16; ++l) {
            cum += probs[l];
            if (x < cum) {
                label = l;
                break;
            }
        }
        rec.label = label;
        rec.branch_probability = probs[label];
        apply_local_operator(state, syndrome_projector(block, syndrome_raw_from_label(label)),
                             block.targets());
        state.rho /= state.rho.trace().real();
    } else {
        auto ext = extend_with_ancillas(state, spec, active, opt.ancilla, 1, opt.max_qubits);
        const int anc = ext.first_ancilla;
        int raw = 0;
        for (int g = 0; g < 4; ++g) {
            run_circuit(ext.state, round_circuit(block, g, ext.state.n_qubits, anc), ext.spec,
                        ext.active, cache);
            const int anc_list[] = {anc};
            const auto m = sample_measurement(ext.state, anc_list, rng);
            raw = (raw << 1) | m.outcome[0];
            rec.branch_probability *= m.branch_probability;
            if (m.outcome[0] == 1) apply_local_operator(ext.state, pauli_x(), anc_list);
        }
        std::vector<int> keep;
        for (int q = 0; q < state.n_qubits; ++q) keep.push_back(q);
        state = partial_trace(ext.state, keep);
        rec.label = syndrome_label_from_raw(raw);
    }
    rec.applied = block.correction[rec.label];
    apply_pauli5(state, block, rec.applied);
    return rec;
}

std::vector<GateStep> logical_cnot(const CodeBlock& block, int target) {
    for (int q : block.qubits)
        if (q == target) throw ArgumentError("CNOT target overlaps the code block");
    std::vector<GateStep> steps;
    for (int q : block.qubits) {
        GateStep s;
        s.gates.push_back(gate_cnot(q, target));
        steps.push_back(std::move(s));
    }
    return steps;
}

std::vector<GateStep> logical_controlled_rotation(const CodeBlock& block, int target,
                                                  double theta, Axis axis) {
    std::vector<GateStep> steps;
    auto one = [&](Gate g) {
        GateStep s;
        s.gates.push_back(std::move(g));
        steps.push_back(std::move(s));
    };
    if (axis == Axis::X) one(gate_h(target));
    one(gate_rz(target, theta / 2.0));
    for (auto& s : logical_cnot(block, target)) steps.push_back(std::move(s));
    one(gate_rz(target, -theta / 2.0));
    for (auto& s : logical_cnot(block, target)) steps.push_back(std::move(s));
    if (axis == Axis::X) one(gate_h(target));
    return steps;
}

namespace {

// Spread a code-space unitary over `depth` charged gate-steps.
std::vector<GateStep> spread_code_unitary(const CodeBlock& block, const Mat& m2,
                                          const std::string& name, int depth) {
    if (depth < 1) throw ArgumentError("logical gate depth must be at least 1");
    static std::mutex mu;
    static std::map<std::uint64_t, Mat> generators;
    const std::uint64_t key =
        fnv1a_matrix(m2, fnv1a(block.qubits.data(), sizeof(block.qubits)));
    Mat gen;
    {
        std::scoped_lock lock(mu);
        auto it = generators.find(key);
        if (it == generators.end())
            it = generators.emplace(key, hermitian_generator(code_space_unitary(block, m2))).first;
        gen = it->second;
    }
    Gate g;
    g.name = name + (depth > 1 ? "(1/" + std::to_string(depth) + ")" : "");
    g.targets.assign(block.qubits.begin(), block.qubits.end());
    g.generator = gen / depth;
    std::vector<GateStep> steps;
    for (int i = 0; i < depth; ++i) {
        GateStep s;
        s.gates.push_back(g);
        steps.push_back(std::move(s));
    }
    return steps;
}

}  // namespace

std::vector<GateStep> logical_h(const CodeBlock& block, int depth) {
    return spread_code_unitary(block, hadamard(), "H_L", depth);
}

std::vector<GateStep> logical_rz(const CodeBlock& block, double theta, int depth) {
    Mat rz(2, 2);
    rz << std::exp(cplx(0, -theta / 2.0)), 0, 0, std::exp(cplx(0, theta / 2.0));
    return spread_code_unitary(block, rz, "RZ_L", depth);
}

std::vector<GateStep> logical_x(const CodeBlock& block) {
    GateStep s;
    for (int q : block.qubits) s.gates.push_back(gate_x(q));
    return {s};
}

std::vector<GateStep> logical_z(const CodeBlock& block) {
    GateStep s;
    for (int q : block.qubits) s.gates.push_back(gate_z(q));
    return {s};
}

std::array<Branch, 2> measure_logical_z(const DensityState& state, const CodeBlock& block) {
    const int n = state.n_qubits;
    const long dim = state.dim();
    long mask = 0;
    for (int q : block.qubits) mask |= 1l << bit_position(q, n);

    std::array<Branch, 2> out;
    for (int parity = 0; parity < 2; ++parity) {
        out[parity].outcome = {parity};
        out[parity].state = state;
    }
    auto parity_of = [&](long i) { return std::popcount(static_cast<unsigned long>(i & mask)) & 1; };
    for (long i = 0; i < dim; ++i) out[parity_of(i)].probability += state.rho(i, i).real();
    for (int parity = 0; parity < 2; ++parity) {
        Mat& r = out[parity].state.rho;
        for (long j = 0; j < dim; ++j)
            for (long i = 0; i < dim; ++i)
                if (parity_of(i) != parity || parity_of(j) != parity) r(i, j) = 0;
        if (out[parity].probability > 0) r /= out[parity].probability;
    }
    return out;
}

std::string syndrome_table_csv(const CodeBlock& block) {
    std::array<std::vector<std::string>, 16> causes;
    auto add = [&](const Pauli5& e) { causes[syndrome_label(block, e)].push_back(pauli5_string(e)); };
    Pauli5 e{};
    for (int q = 0; q < 5; ++q)
        for (Pauli p : {Pauli::X, Pauli::Y, Pauli::Z}) {
            e.fill(Pauli::I);
            e[q] = p;
            add(e);
        }
    for (int q1 = 0; q1 < 5; ++q1)
        for (int q2 = q1 + 1; q2 < 5; ++q2)
            for (Pauli p1 : {Pauli::X, Pauli::Y, Pauli::Z})
                for (Pauli p2 : {Pauli::X, Pauli::Y, Pauli::Z}) {
                    e.fill(Pauli::I);
                    e[q1] = p1;
                    e[q2] = p2;
                    add(e);
                }
    std::ostringstream os;
    os << "syndrome,causes\n";
    os << "0000,IIIII\n";
    for (int label = 1; label < 16; ++label) {
        auto& list = causes[label];
        std::sort(list.begin(), list.end(), [](const std::string& a, const std::string& b) {
            const auto wa = std::count_if(a.begin(), a.end(), [](char c) { return c != 'I'; });
            const auto wb = std::count_if(b.begin(), b.end(), [](char c) { return c != 'I'; });
            return wa != wb ? wa < wb : a < b;
        });
        os << syndrome_bits(label) << ",";
        for (std::size_t i = 0; i < list.size(); ++i) os << (i ? " " : "") << list[i];
        os << "\n";
    }
    return os.str();
}

}  // namespace qlps
