#pragma once

#include <json.hpp>

#include "qlps/phase_estimation.hpp"

namespace qlps {

inline constexpr const char* kVersion = "0.1.0";

// Exit codes of the CLI.
enum ExitCode : int {
    kExitOk = 0,
    kExitConfigError = 2,
    kExitAccuracyError = 3,
    kExitPartial = 4,
};

struct CsvTable {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;

    std::string to_string() const;
};

struct ExperimentResult {
    CsvTable data;
    nlohmann::json meta;                 // config echo, hash, seed, totals
    std::vector<std::pair<std::string, std::string>> plots;  // filename -> svg
    bool partial = false;
};

// Resolved run description shared by every experiment.
struct RunContext {
    nlohmann::json config;       // fully resolved configuration
    std::uint64_t seed = 1;
    int workers = 1;
    double budget_seconds = 0;   // 0 = unlimited
    bool make_plots = true;
    bool dry_run = false;
};

nlohmann::json default_experiment_config(const std::string& name, bool full_scale);

ExperimentResult run_experiment(const std::string& name, const RunContext& ctx);

// Writes data.csv, meta.json and any plots under dir; creates directories.
void write_experiment_output(const std::string& dir, const ExperimentResult& result);

std::uint64_t config_hash(const nlohmann::json& config);

// Quick self-check of the library's core invariants; returns failure count.
int selftest(std::ostream& os);

}  // namespace qlps
