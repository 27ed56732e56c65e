#include "qrabi/validate.hpp"

#include <cmath>
#include <sstream>

#include <nlohmann/json.hpp>

#include "qrabi/analytic.hpp"
#include "qrabi/oracle.hpp"

namespace qrabi::validate {

int oracle_n_fock_for(double g) { return 48 + static_cast<int>(std::ceil(48.0 * g)); }

double oracle_deviation(const ModelParams& params1, const ModelParams& params2,
                        const BellSpec& bell, const std::vector<double>& times,
                        const TruncationPolicy& policy) {
    const ConcurrenceSeries engine =
        concurrence_series(params1, params2, bell, times, policy);
    const int n_fock = oracle_n_fock_for(std::max(params1.g, params2.g));
    const oracle::JointResult reference =
        oracle::joint_dynamics(params1, params2, bell, times, n_fock);
    double dev = 0.0;
    for (std::size_t i = 0; i < times.size(); ++i)
        dev = std::max(dev, std::abs(engine.concurrence[i] - reference.concurrence[i]));
    return dev;
}

double rwa_limit_deviation(double g, const TruncationPolicy& policy, int n_steps) {
    const ModelParams params{1.0, 1.0, g, kPi / 4};
    const BellSpec bell{BellKind::bell1, kPi / 4};
    // one full period of cos^2(G t / 2), G = 2 g
    const double period = 2.0 * kPi / (2.0 * params.lambda());
    const std::vector<double> times = uniform_grid(period, n_steps);
    const ConcurrenceSeries engine = concurrence_series(params, params, bell, times, policy);
    double dev = 0.0;
    for (std::size_t i = 0; i < times.size(); ++i)
        dev = std::max(dev,
                       std::abs(engine.concurrence[i] - concurrence_rwa(params, bell, times[i])));
    return dev;
}

Report run_default_suite(const TruncationPolicy& policy, double t_max, int n_steps) {
    Report report;
    const std::vector<double> times = uniform_grid(t_max, n_steps);
    for (double g : {0.01, 0.1, 0.3, 1.0})
        for (int bell_kind : {1, 2}) {
            const double alpha = bell_kind == 1 ? kPi / 4 : kPi / 12;
            const ModelParams params{1.0, 1.0, g, alpha};
            const BellSpec bell{bell_kind == 1 ? BellKind::bell1 : BellKind::bell2, alpha};
            std::ostringstream name;
            name << "oracle_equivalence g=" << g << " bell" << bell_kind;
            const double dev = oracle_deviation(params, params, bell, times, policy);
            report.checks.push_back(CheckResult{name.str(), dev, 1e-6, dev <= 1e-6});
        }
    const double rwa_dev = rwa_limit_deviation(1e-4, policy, n_steps);
    report.checks.push_back(
        CheckResult{"rwa_weak_coupling_limit g=1e-4", rwa_dev, 1e-3, rwa_dev <= 1e-3});
    return report;
}

std::string report_json(const Report& report) {
    nlohmann::json checks = nlohmann::json::array();
    for (const CheckResult& c : report.checks)
        checks.push_back({{"name", c.name},
                          {"max_deviation", c.max_deviation},
                          {"tolerance", c.tolerance},
                          {"pass", c.pass}});
    return nlohmann::json{{"checks", checks}, {"all_pass", report.all_pass()}}.dump(2) + "\n";
}

} // namespace qrabi::validate
