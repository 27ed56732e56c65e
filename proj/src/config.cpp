#include "qrabi/config.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace qrabi {

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

double parse_double(const std::string& s) {
    double v = 0.0;
    const char* begin = s.data();
    const char* end = begin + s.size();
    auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc{} || ptr != end)
        throw ConfigError("config: bad numeric value '" + s + "'");
    return v;
}

int parse_int(const std::string& s) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw ConfigError("config: bad integer value '" + s + "'");
    return v;
}

std::string format_full(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string format_grid(const std::vector<double>& grid) {
    std::string out;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (i) out += ",";
        out += format_full(grid[i]);
    }
    return out;
}

} // namespace

std::vector<double> parse_grid(const std::string& text) {
    std::vector<double> grid;
    const std::string body = trim(text);
    if (body.empty()) return grid;

    if (body.find(':') != std::string::npos) {
        // lo:hi:count linspace
        std::istringstream ss(body);
        std::string lo_s, hi_s, n_s;
        if (!std::getline(ss, lo_s, ':') || !std::getline(ss, hi_s, ':') ||
            !std::getline(ss, n_s))
            throw ConfigError("config: bad grid '" + body + "' (want lo:hi:count)");
        const double lo = parse_double(trim(lo_s));
        const double hi = parse_double(trim(hi_s));
        const int n = parse_int(trim(n_s));
        if (n < 1) throw ConfigError("config: grid count must be >= 1");
        for (int i = 0; i < n; ++i)
            grid.push_back(n == 1 ? lo : lo + (hi - lo) * i / (n - 1));
        return grid;
    }
    std::istringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) grid.push_back(parse_double(trim(item)));
    return grid;
}

void apply_config_key(ExperimentConfig& c, const std::string& key, const std::string& value) {
    auto set_alpha = [&](double a) {
        c.bell.alpha = a;
        c.params1.alpha = a;
        c.params2.alpha = a;
    };
    if (key == "mode") {
        if (value == "spectrum") c.mode = RunMode::spectrum;
        else if (value == "dynamics") c.mode = RunMode::dynamics;
        else if (value == "sweep") c.mode = RunMode::sweep;
        else if (value == "validate") c.mode = RunMode::validate;
        else throw ConfigError("config: unknown mode '" + value + "'");
    } else if (key == "omega") {
        const double delta = c.params1.detuning();
        c.params1.omega = c.params2.omega = parse_double(value);
        // keep the detuning, not the splitting, when omega moves
        c.params1.delta_atom = c.params2.delta_atom = c.params1.omega - delta;
    } else if (key == "delta") {
        const double d = parse_double(value);
        c.params1.delta_atom = c.params1.omega - d;
        c.params2.delta_atom = c.params2.omega - d;
    } else if (key == "delta_atom") {
        c.params1.delta_atom = c.params2.delta_atom = parse_double(value);
    } else if (key == "g") {
        c.params1.g = parse_double(value);
    } else if (key == "g2") {
        c.params2.g = parse_double(value);
    } else if (key == "alpha") {
        set_alpha(parse_double(value));
    } else if (key == "bell") {
        const int b = parse_int(value);
        if (b != 1 && b != 2) throw ConfigError("config: bell must be 1 or 2");
        c.bell.kind = (b == 1) ? BellKind::bell1 : BellKind::bell2;
    } else if (key == "tmax") {
        c.t_max = parse_double(value);
    } else if (key == "steps") {
        c.n_steps = parse_int(value);
    } else if (key == "ntr") {
        c.policy.n_tr_initial = parse_int(value);
    } else if (key == "ntr_max") {
        c.policy.n_tr_max = parse_int(value);
    } else if (key == "tol") {
        c.policy.convergence_tol = parse_double(value);
    } else if (key == "observable") {
        if (value == "concurrence") c.policy.observable = ConvergenceObservable::concurrence;
        else if (value == "spectrum") c.policy.observable = ConvergenceObservable::spectrum;
        else throw ConfigError("config: unknown observable '" + value + "'");
    } else if (key == "workers") {
        c.workers = parse_int(value);
    } else if (key == "out") {
        c.out_path = value;
    } else if (key == "g_grid") {
        c.g_grid = parse_grid(value);
    } else if (key == "delta_grid") {
        c.delta_grid = parse_grid(value);
    } else if (key == "alpha_grid") {
        c.alpha_grid = parse_grid(value);
    } else {
        throw ConfigError("config: unknown key '" + key + "'");
    }
}

ExperimentConfig parse_config_text(const std::string& text) {
    ExperimentConfig config;
    std::istringstream ss(text);
    std::string line;
    int lineno = 0;
    while (std::getline(ss, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config line " + std::to_string(lineno) + ": expected key=value");
        apply_config_key(config, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    return config;
}

ExperimentConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

std::string serialize_config(const ExperimentConfig& c) {
    std::ostringstream out;
    const char* mode = c.mode == RunMode::spectrum    ? "spectrum"
                       : c.mode == RunMode::dynamics  ? "dynamics"
                       : c.mode == RunMode::sweep     ? "sweep"
                                                      : "validate";
    out << "mode = " << mode << "\n";
    out << "omega = " << format_full(c.params1.omega) << "\n";
    // delta_atom rather than the derived detuning so the round trip is exact
    out << "delta_atom = " << format_full(c.params1.delta_atom) << "\n";
    out << "g = " << format_full(c.params1.g) << "\n";
    out << "g2 = " << format_full(c.params2.g) << "\n";
    out << "alpha = " << format_full(c.bell.alpha) << "\n";
    out << "bell = " << (c.bell.kind == BellKind::bell1 ? 1 : 2) << "\n";
    out << "tmax = " << format_full(c.t_max) << "\n";
    out << "steps = " << c.n_steps << "\n";
    out << "ntr = " << c.policy.n_tr_initial << "\n";
    out << "ntr_max = " << c.policy.n_tr_max << "\n";
    out << "tol = " << format_full(c.policy.convergence_tol) << "\n";
    out << "observable = "
        << (c.policy.observable == ConvergenceObservable::concurrence ? "concurrence"
                                                                      : "spectrum")
        << "\n";
    out << "workers = " << c.workers << "\n";
    out << "out = " << c.out_path << "\n";
    out << "g_grid = " << format_grid(c.g_grid) << "\n";
    out << "delta_grid = " << format_grid(c.delta_grid) << "\n";
    out << "alpha_grid = " << format_grid(c.alpha_grid) << "\n";
    return out.str();
}

void ExperimentConfig::validate() const {
    params1.validate();
    params2.validate();
    policy.validate();
    if (!(t_max > 0.0)) throw ConfigError("config: tmax must be positive");
    if (n_steps < 2) throw ConfigError("config: steps must be >= 2");
    if (workers < 1) throw ConfigError("config: workers must be >= 1");
    for (const auto* grid : {&g_grid, &delta_grid, &alpha_grid})
        for (double v : *grid)
            if (!std::isfinite(v)) throw ConfigError("config: non-finite grid value");
    for (double v : g_grid)
        if (v < 0.0) throw ConfigError("config: g grid values must be nonnegative");
}

} // namespace qrabi
