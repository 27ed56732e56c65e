#include "qrabi/runner.hpp"

#include <algorithm>
#include <atomic>
#include <iostream>
#include <optional>
#include <thread>

#include <nlohmann/json.hpp>

#include "qrabi/analytic.hpp"
#include "qrabi/io.hpp"
#include "qrabi/validate.hpp"

namespace qrabi {

namespace {

const char* kPlotStub =
    "#!/usr/bin/env python3\n"
    "# Stub: plot the CSV next to this file with any tool you like.\n"
    "# Columns are named in the header row; e.g. with matplotlib+pandas:\n"
    "#\n"
    "#   import pandas as pd, matplotlib.pyplot as plt, sys\n"
    "#   df = pd.read_csv(sys.argv[1])\n"
    "#   df.plot(x=df.columns[0], y=df.columns[1])\n"
    "#   plt.show()\n";

void write_plot_stub(const std::string& out_path) {
    io::write_file(out_path + ".plot.py", kPlotStub);
}

} // namespace

int run_spectrum(const ExperimentConfig& config) {
    config.validate();
    const DisplacedSpectrum spec = solve_subsystem(config.params1, config.policy);
    io::write_file(config.out_path, io::spectrum_csv(spec));
    std::cout << "spectrum: " << spec.levels.size() << " levels at n_tr=" << spec.n_tr
              << " -> " << config.out_path << "\n";
    return 0;
}

int run_dynamics(const ExperimentConfig& config) {
    config.validate();
    const std::vector<double> times = uniform_grid(config.t_max, config.n_steps);
    const ConcurrenceSeries series = concurrence_series(config.params1, config.params2,
                                                        config.bell, times, config.policy);

    io::DynamicsTable table;
    table.times = times;
    table.c_exact = series.concurrence;
    table.photon1 = series.photon1;
    table.photon2 = series.photon2;
    table.norm_error = series.norm_error;
    table.c_rwa.reserve(times.size());
    table.c_transformed.reserve(times.size());
    for (double t : times) {
        table.c_rwa.push_back(concurrence_rwa(config.params1, config.bell, t));
        table.c_transformed.push_back(concurrence_transformed(config.params1, config.bell, t));
    }

    io::write_file(config.out_path, io::dynamics_csv(table));
    io::write_file(config.out_path + ".esd.json", io::esd_json(series.esd_intervals));
    write_plot_stub(config.out_path);
    std::cout << "dynamics: " << times.size() << " samples, " << series.esd_intervals.size()
              << " ESD interval(s), n_tr=" << series.n_tr1 << "/" << series.n_tr2 << " -> "
              << config.out_path << "\n";
    return 0;
}

namespace {

struct SweepPoint {
    double g = 0.0;
    double delta = 0.0;
    double alpha = 0.0;
    ModelParams p1, p2;
    BellSpec bell;
};

std::vector<SweepPoint> sweep_points(const ExperimentConfig& config) {
    int n_axes = 0;
    for (const auto* grid : {&config.g_grid, &config.delta_grid, &config.alpha_grid})
        if (!grid->empty()) ++n_axes;
    if (n_axes < 1 || n_axes > 2)
        throw ConfigError("sweep: exactly one or two sweep axes required (g_grid, delta_grid, alpha_grid)");

    auto sorted = [](std::vector<double> v) {
        std::sort(v.begin(), v.end());
        return v;
    };
    const std::vector<double> gs =
        config.g_grid.empty() ? std::vector<double>{config.params1.g} : sorted(config.g_grid);
    const std::vector<double> deltas = config.delta_grid.empty()
                                           ? std::vector<double>{config.params1.detuning()}
                                           : sorted(config.delta_grid);
    const std::vector<double> alphas = config.alpha_grid.empty()
                                           ? std::vector<double>{config.bell.alpha}
                                           : sorted(config.alpha_grid);

    // when g is swept with asymmetric atoms, the g2/g ratio is preserved
    const double ratio =
        config.params1.g > 0.0 ? config.params2.g / config.params1.g : 1.0;

    std::vector<SweepPoint> points;
    for (double g : gs)
        for (double delta : deltas)
            for (double alpha : alphas) {
                SweepPoint pt;
                pt.g = config.g_grid.empty() ? config.params1.g : g;
                pt.delta = delta;
                pt.alpha = alpha;
                pt.p1 = ModelParams::from_detuning(config.params1.omega, delta, pt.g, alpha);
                const double g2 = config.g_grid.empty() ? config.params2.g : pt.g * ratio;
                pt.p2 = ModelParams::from_detuning(config.params2.omega, delta, g2, alpha);
                pt.bell = BellSpec{config.bell.kind, alpha};
                points.push_back(pt);
            }
    return points;
}

} // namespace

int run_sweep(const ExperimentConfig& config) {
    config.validate();
    const std::vector<SweepPoint> points = sweep_points(config);
    const std::vector<double> times = uniform_grid(config.t_max, config.n_steps);

    std::vector<std::optional<ConcurrenceSeries>> results(points.size());
    std::vector<std::string> errors(points.size());

    std::atomic<std::size_t> next{0};
    auto work = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= points.size()) return;
            try {
                results[i] = concurrence_series(points[i].p1, points[i].p2, points[i].bell,
                                                times, config.policy);
            } catch (const std::exception& e) {
                errors[i] = e.what();
            }
        }
    };
    const int n_threads = std::min<int>(config.workers, static_cast<int>(points.size()));
    std::vector<std::thread> pool;
    for (int i = 1; i < n_threads; ++i) pool.emplace_back(work);
    work();
    for (std::thread& th : pool) th.join();

    // single writer, rows sorted by axes then t regardless of scheduling
    std::vector<io::SweepRow> rows;
    nlohmann::json failures = nlohmann::json::array();
    for (std::size_t i = 0; i < points.size(); ++i) {
        const SweepPoint& pt = points[i];
        if (!results[i]) {
            failures.push_back({{"g", pt.p1.g},
                                {"g2", pt.p2.g},
                                {"delta", pt.delta},
                                {"alpha", pt.alpha},
                                {"error", errors[i]}});
            continue;
        }
        const ConcurrenceSeries& s = *results[i];
        for (std::size_t k = 0; k < s.times.size(); ++k)
            rows.push_back(io::SweepRow{pt.p1.g, pt.p2.g, pt.delta, pt.alpha, s.times[k],
                                        s.concurrence[k]});
    }
    io::write_file(config.out_path, io::sweep_csv(rows));
    nlohmann::json meta{{"points", points.size()},
                        {"failed", failures.size()},
                        {"failures", failures}};
    io::write_file(config.out_path + ".report.json", meta.dump(2) + "\n");
    write_plot_stub(config.out_path);
    std::cout << "sweep: " << points.size() - failures.size() << "/" << points.size()
              << " points -> " << config.out_path << "\n";
    if (!failures.empty())
        std::cerr << "sweep: " << failures.size() << " point(s) failed; see "
                  << config.out_path << ".report.json\n";
    return 0;
}

int run_validate(const ExperimentConfig& config) {
    config.validate();
    const validate::Report report =
        validate::run_default_suite(config.policy, config.t_max, config.n_steps);
    io::write_file(config.out_path, validate::report_json(report));
    for (const validate::CheckResult& c : report.checks)
        std::cout << (c.pass ? "PASS " : "FAIL ") << c.name << "  max_dev=" << c.max_deviation
                  << " tol=" << c.tolerance << "\n";
    std::cout << (report.all_pass() ? "validation passed" : "validation FAILED") << " -> "
              << config.out_path << "\n";
    return report.all_pass() ? 0 : 1;
}

int run(const ExperimentConfig& config) {
    switch (config.mode) {
        case RunMode::spectrum: return run_spectrum(config);
        case RunMode::dynamics: return run_dynamics(config);
        case RunMode::sweep: return run_sweep(config);
        case RunMode::validate: return run_validate(config);
    }
    throw ConfigError("unknown run mode");
}

} // namespace qrabi
