#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "qlps/noise_model.hpp"

namespace qlps {

// A gate is stored through its Hermitian generator: the unitary is
// exp(i * generator). Generators of the standard gates are built analytically.
struct Gate {
    std::string name;
    std::vector<int> targets;
    Mat generator;
};

Mat gate_unitary(const Gate& g);

// Gates sharing one gate duration; target sets must be pairwise disjoint.
struct GateStep {
    std::vector<Gate> gates;
};

struct Circuit {
    int n_qubits = 0;
    std::vector<GateStep> steps;

    Circuit() = default;
    explicit Circuit(int n) : n_qubits(n) {}
    void append(Gate g);                          // one gate as its own step
    void append(GateStep step);
    void append(std::vector<GateStep> fragment);  // splice a fragment
    int depth() const { return static_cast<int>(steps.size()); }
};

// Typed builders for the canonical gate set.
Gate gate_identity(int q);
Gate gate_x(int q);
Gate gate_y(int q);
Gate gate_z(int q);
Gate gate_h(int q);
Gate gate_s(int q);
Gate gate_rx(int q, double theta);
Gate gate_rz(int q, double theta);
Gate gate_cnot(int control, int target);
Gate gate_cz(int control, int target);
Gate gate_crx(int control, int target, double theta);
Gate gate_crz(int control, int target, double theta);

// Name-based lookup ("I","X","Y","Z","H","S","RX","RZ","CNOT","CZ","CRX","CRZ").
Gate standard_gate(const std::string& name, std::span<const int> targets,
                   std::span<const double> params = {});

// Memo for substep/full-step unitaries, reused across repeated gate-steps.
class EvolutionCache {
  public:
    const Mat& substep_unitary(const Gate& g, int substeps);
    const Mat& full_unitary(const Gate& g);

  private:
    std::unordered_map<std::uint64_t, Mat> cache_;
};

// One gate-step of duration Tg: n_sub substeps alternating decoherence and
// fractional gate evolution, decoherence first. Gates on qubits disjoint from
// every noisy active qubit commute with the noise and are applied whole.
void run_gate_step(DensityState& state, const GateStep& step, const NoiseSpec& spec,
                   std::span<const int> active, EvolutionCache* cache = nullptr);

void run_circuit(DensityState& state, const Circuit& circuit, const NoiseSpec& spec,
                 std::span<const int> active, EvolutionCache* cache = nullptr);

// Controlled signal fragment: accelerated applies one controlled-R_p(2^k * theta)
// step, non-accelerated applies 2^k sequential controlled-R_p(theta) steps.
enum class Axis { X, Z };
std::vector<GateStep> controlled_signal(int control, int target, int power, double theta,
                                        Axis axis, bool accelerated);

// One gate-step per line, for golden-file tests.
std::string dump_circuit(const Circuit& circuit);

}  // namespace qlps
