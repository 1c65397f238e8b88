#pragma once

#include <iosfwd>
#include <string>

#include "oldroyd_cli/config.hpp"

namespace oldroyd::cli {

enum ExitCode { exit_ok = 0, exit_config = 2, exit_blowup = 3, exit_io = 4 };

int run_simulate(const ExperimentConfig& cfg, std::ostream& log);
int run_analyze(const ExperimentConfig& cfg, std::ostream& log);
int run_verify_estimates(const ExperimentConfig& cfg, std::ostream& log);
int run_linear_decay(const ExperimentConfig& cfg, std::ostream& log);
int run_sweep_conditions(const ExperimentConfig& cfg, std::ostream& log);

// Full command line handling; maps exceptions to exit codes.
int main_entry(int argc, char** argv);

}  // namespace oldroyd::cli
