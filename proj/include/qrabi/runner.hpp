#pragma once

#include "qrabi/config.hpp"

// Subcommand entry points; each writes its output files and returns the
// process exit code (0 ok, 1 physics failure, 2 config error, 3 non-convergence).

namespace qrabi {

int run_spectrum(const ExperimentConfig& config);
int run_dynamics(const ExperimentConfig& config);
int run_sweep(const ExperimentConfig& config);
int run_validate(const ExperimentConfig& config);

int run(const ExperimentConfig& config);

} // namespace qrabi
