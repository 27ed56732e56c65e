#pragma once

#include <string>
#include <vector>

#include "qrabi/bell.hpp"
#include "qrabi/model.hpp"

// Experiment configuration: flat key=value text files plus command-line
// overrides; all physical quantities in units of omega = 1 unless omega is
// set explicitly.

namespace qrabi {

enum class RunMode { spectrum, dynamics, sweep, validate };

struct ExperimentConfig {
    RunMode mode = RunMode::dynamics;
    ModelParams params1;
    ModelParams params2;
    BellSpec bell;
    double t_max = 30.0;
    int n_steps = 1500;
    std::vector<double> g_grid;      // sweep axis when nonempty
    std::vector<double> delta_grid;  // sweep axis when nonempty
    std::vector<double> alpha_grid;  // sweep axis when nonempty
    TruncationPolicy policy;
    std::string out_path = "qrabi_out.csv";
    int workers = 1;

    void validate() const;
    bool operator==(const ExperimentConfig&) const = default;
};

// `key = value` lines; '#' starts a comment; unknown keys are errors.
// Grids accept comma lists (0.1,0.2,0.5) or lo:hi:count linspace syntax.
ExperimentConfig parse_config_text(const std::string& text);
ExperimentConfig load_config_file(const std::string& path);
std::string serialize_config(const ExperimentConfig& config);
void apply_config_key(ExperimentConfig& config, const std::string& key,
                      const std::string& value);

std::vector<double> parse_grid(const std::string& text);

} // namespace qrabi
