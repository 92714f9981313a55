#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <string>

#include "qlps/gate_evolution.hpp"
#include "qlps/measurement.hpp"

namespace qlps {

enum class Pauli : std::uint8_t { I, X, Y, Z };
using Pauli5 = std::array<Pauli, 5>;

const Mat& pauli_matrix(Pauli p);
Mat pauli5_matrix(const Pauli5& p);  // 32 x 32, qubit 0 of the string first
std::string pauli5_string(const Pauli5& p);
bool anticommutes(Pauli a, Pauli b);

// Syndrome conventions. Raw bits are the generator measurement outcomes
// (bit i = 1 iff the error anticommutes with generator g_{i+1}); the public
// 4-bit syndrome value follows the paper's printed table, which labels rows by
// the running XOR of the generator outcomes: t_i = s_1 ^ ... ^ s_i. Both are
// packed with g1's bit most significant. The map is a bijection, so "trivial
// syndrome" means the same thing in both conventions.
int syndrome_label_from_raw(int raw);
int syndrome_raw_from_label(int label);
std::string syndrome_bits(int value);

// The 5-qubit perfect code on five register qubits.
struct CodeBlock {
    std::array<int, 5> qubits;
    std::array<Pauli5, 4> generators;
    Vec codeword0, codeword1;              // 32-amplitude local vectors
    std::array<Pauli5, 16> correction;     // weight-1 correction per syndrome label

    std::span<const int> targets() const { return qubits; }
};

// Builds generators, codewords and the syndrome table, verifying the
// stabilizer conditions, orthonormality and the parity attribute.
CodeBlock build_code(const std::array<int, 5>& qubits = {0, 1, 2, 3, 4});

int syndrome_raw(const CodeBlock& block, const Pauli5& error);
int syndrome_label(const CodeBlock& block, const Pauli5& error);

// a|0_L> + b|1_L| as a normalized 32-amplitude vector.
Vec logical_vector(const CodeBlock& block, cplx a, cplx b);

// Projector onto the code space == projector onto the trivial syndrome.
Mat code_projector(const CodeBlock& block);
// Projector onto a raw generator-outcome pattern.
Mat syndrome_projector(const CodeBlock& block, int raw);

// Unitary completing the code-space action m2 (2x2 on the logical qubit) by
// identity on the orthogonal complement; 32 x 32 local to the block.
Mat code_space_unitary(const CodeBlock& block, const Mat& m2);

// 64 x 64 isometry completion mapping |b>_source |00000>_block to
// |0>_source |b_L>_block; local qubit order is (source, block...).
Mat encoding_unitary(const CodeBlock& block);

// Applies the encoding unitary on (source, block). Source must be outside the
// block; block qubits must hold |00000>.
void encode(DensityState& state, const CodeBlock& block, int source);
void decode(DensityState& state, const CodeBlock& block, int source);

// --- syndrome extraction and post-selection -------------------------------

enum class SyndromeMode { Ideal, Circuit };

struct AncillaProfile {
    double t1 = kInfTime;
    double t2 = kInfTime;
};

struct SyndromeOptions {
    SyndromeMode mode = SyndromeMode::Circuit;
    bool parallel_ancillas = false;  // 4 ancillas in one pass instead of a reused one
    AncillaProfile ancilla;
    int max_qubits = kDefaultMaxQubits;
};

// Outcome probabilities of an ideal syndrome measurement, indexed by label.
std::array<double, 16> syndrome_probabilities(const DensityState& state, const CodeBlock& block);

// Ideal-mode collapse onto one syndrome label.
void collapse_syndrome(DensityState& state, const CodeBlock& block, int label,
                       bool record_trace = false);

// Logical post-selection: forces every generator outcome to 0, appending the
// retained trace to the state's log. Circuit mode runs noisy ancilla-based
// extraction (one post-selection entry per generator round).
void lps(DensityState& state, const CodeBlock& block, const NoiseSpec& spec,
         std::span<const int> active, const SyndromeOptions& opt = {},
         EvolutionCache* cache = nullptr);

struct SyndromeBranch {
    int label = 0;
    double probability = 0;
    DensityState state;  // ancilla traced out, correction not yet applied
};

// Exact evaluation of all 16 syndrome-measurement branches (the sampling tree
// of the sequential circuit, or ideal projectors). Branch probabilities are
// not logged as lost information.
std::vector<SyndromeBranch> syndrome_branches(const DensityState& state, const CodeBlock& block,
                                              const NoiseSpec& spec, std::span<const int> active,
                                              const SyndromeOptions& opt = {},
                                              EvolutionCache* cache = nullptr);

struct CorrectionRecord {
    int label = 0;
    Pauli5 applied{};
    double branch_probability = 1;
};

// One round of error correction: sample a syndrome, apply the weight-1
// correction from the table (as an instantaneous frame update).
CorrectionRecord error_correct(DensityState& state, const CodeBlock& block,
                               const NoiseSpec& spec, std::span<const int> active,
                               std::mt19937_64& rng, const SyndromeOptions& opt = {},
                               EvolutionCache* cache = nullptr);

void apply_pauli5(DensityState& state, const CodeBlock& block, const Pauli5& p);

// --- logical gates ---------------------------------------------------------

struct LogicalDepths {
    int h = 10;   // gate-steps charged for the logical Hadamard
    int rz = 3;   // gate-steps charged for the logical R_z
};

// Five physical CNOTs, one per block qubit, sharing the target; depth 5.
std::vector<GateStep> logical_cnot(const CodeBlock& block, int target);

// Logically controlled rotation via the two-CNOT decomposition
// (R_z(theta/2), L-CNOT, R_z(-theta/2), L-CNOT), X axis by H conjugation.
std::vector<GateStep> logical_controlled_rotation(const CodeBlock& block, int target,
                                                  double theta, Axis axis);

std::vector<GateStep> logical_h(const CodeBlock& block, int depth = LogicalDepths{}.h);
std::vector<GateStep> logical_rz(const CodeBlock& block, double theta,
                                 int depth = LogicalDepths{}.rz);
std::vector<GateStep> logical_x(const CodeBlock& block);  // X on all five, depth 1
std::vector<GateStep> logical_z(const CodeBlock& block);  // Z on all five, depth 1

// Measurement of the logical Z operator (parity of the five block qubits).
// Returns {P(0), P(1)} and collapsed states; branch probabilities are not
// logged as lost information.
std::array<Branch, 2> measure_logical_z(const DensityState& state, const CodeBlock& block);

// Table S2-style export: syndrome label, weight-1 correction and all causes of
// weight <= 2, sorted by weight then string.
std::string syndrome_table_csv(const CodeBlock& block);

}  // namespace qlps
