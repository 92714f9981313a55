#include "qlps/experiments.hpp"

namespace qlps {

std::string CsvTable::to_string() const { return ""; }

nlohmann::json default_experiment_config(const std::string&, bool) { return {}; }

ExperimentResult run_experiment(const std::string&, const RunContext&) { return {}; }

void write_experiment_output(const std::string&, const ExperimentResult&) {}

std::uint64_t config_hash(const nlohmann::json&) { return 0; }

int selftest(std::ostream&) { return 0; }

}  // namespace qlps
