#pragma once

#include <string>
#include <vector>

#include "qrabi/bipartite.hpp"
#include "qrabi/config.hpp"

// Physics self-checks: displaced-basis engine against the raw-basis oracle
// and against the weak-coupling analytic limit.

namespace qrabi::validate {

struct CheckResult {
    std::string name;
    double max_deviation = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct Report {
    std::vector<CheckResult> checks;
    bool all_pass() const {
        for (const CheckResult& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

// Fock dimension that keeps the oracle tail mass far below 1e-12 for g <= 1.
int oracle_n_fock_for(double g);

// max_t |C_engine - C_oracle| for one parameter point
double oracle_deviation(const ModelParams& params1, const ModelParams& params2,
                        const BellSpec& bell, const std::vector<double>& times,
                        const TruncationPolicy& policy);

// max_t |C_engine - C_rwa| at weak coupling over one full period
double rwa_limit_deviation(double g, const TruncationPolicy& policy, int n_steps);

// oracle-equivalence grid (g in {0.01, 0.1, 0.3, 1.0}, both Bell kinds)
// plus the RWA-limit check
Report run_default_suite(const TruncationPolicy& policy, double t_max, int n_steps);

std::string report_json(const Report& report);

} // namespace qrabi::validate
