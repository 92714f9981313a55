#pragma once

#include "qlps/analysis_metrics.hpp"
#include "qlps/five_qubit_code.hpp"

namespace qlps {

enum class AncillaKind { Physical, Logical };
enum class SensorState { Zero, One, Plus, Minus };
enum class KGate { I, S };

// The signal being estimated. `theta` is the eigenphase in radians: one
// controlled application imprints exp(i theta) on the sensor's eigenstate.
// Because R_p(alpha) rotates by half the angle, the underlying controlled
// rotation runs at 2 theta with a sign fixed by (axis, sensor eigenstate).
struct SignalSpec {
    Axis axis = Axis::Z;
    double theta = 0;
    SensorState sensor_init = SensorState::One;
};

struct QpeNoise {
    double t1_ancilla = kInfTime;
    double t2_ancilla = kInfTime;
    double t1_sensor = kInfTime;
    double t2_sensor = kInfTime;
    double gate_time = 1.0;
    int substeps = 20;
};

struct QpeConfig {
    int m = 3;                      // binary digits of precision
    AncillaKind ancilla = AncillaKind::Physical;
    bool lps_enabled = false;
    bool sps_enabled = false;
    bool accelerated = false;
    SignalSpec signal;
    int repeats = 1;                // per-digit majority-vote repetitions, odd
    QpeNoise noise;
    SyndromeMode lps_mode = SyndromeMode::Circuit;
    bool lps_parallel = false;
    int lps_every = 1;              // apply LPS on every j-th iteration
    LogicalDepths depths;
    double prune = 0.0;             // drop tree branches at or below this weight
    double pruned_mass_bound = 1e-6;
    int max_qubits = kDefaultMaxQubits;

    void validate() const;
};

// Raw joint probabilities: bin mass is P(survive all post-selections and
// measure this outcome), so sum(bins) + lost_info + pruned_mass == 1.
struct PhaseHistogram {
    int m = 0;
    std::vector<double> bins;
    double lost_info = 0;
    double pruned_mass = 0;
};

DensityState sensor_state(SensorState s);
Vec sensor_vector(SensorState s);

// The controlled-rotation angle realizing exp(i theta) on the chosen
// eigenstate (+-2 theta, see SignalSpec).
double signal_gadget_angle(const SignalSpec& signal);

struct KitaevIteration {
    double p0 = 0;                 // P(ancilla reads 0), conditional on survival
    double lost_info = 0;          // fraction lost to SPS/LPS in this iteration
    DensityState pre_measurement;  // full register immediately prior to measurement
};

// One Kitaev iteration for digit k (controlled-U^(2^(k-1))), K = I or S.
KitaevIteration kitaev_iteration(const QpeConfig& cfg, int k, KGate kgate,
                                 EvolutionCache* cache = nullptr);

struct KitaevEstimate {
    std::vector<int> bits;  // m+2 bits, most significant first
    double value = 0;       // in turns
};

// Octant rounding for the last digit, then the backward consistency sweep.
KitaevEstimate kitaev_estimator(std::span<const double> alphas, int m);

struct KitaevRun {
    KitaevEstimate estimate;
    std::vector<double> p_i, p_s, alphas;  // one entry per digit
    double lost_info = 0;                  // mean over the 2m iteration runs
};

KitaevRun kitaev_run(const QpeConfig& cfg);

// Full IPEA measurement tree, least significant digit first, with
// measurement-feedback R_z and per-digit majority voting.
PhaseHistogram ipea_run(const QpeConfig& cfg);

struct ReducedTwoQubit {
    Mat raw;         // 4x4 overlap matrix <x_L y| rho |x'_L y'>
    double trace;    // raw trace; below one when support leaks off-code
    Mat normalized;
};

ReducedTwoQubit reduced_two_qubit(const DensityState& state, const CodeBlock& block, int sensor);

// The code block used by every logical-ancilla run: qubits 0..4, sensor 5.
const CodeBlock& qpe_code_block();

std::string histogram_csv(const PhaseHistogram& hist);

}  // namespace qlps
