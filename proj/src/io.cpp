#include "qrabi/io.hpp"

#include <cstdio>
#include <fstream>

#include <nlohmann/json.hpp>

namespace qrabi::io {

std::string format_sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.11e", v);
    return buf;
}

std::string dynamics_csv(const DynamicsTable& tab) {
    std::string out = "t,C_exact,C_rwa,C_transformed,n_ph1,n_ph2,norm_err\n";
    for (std::size_t i = 0; i < tab.times.size(); ++i) {
        out += format_sci(tab.times[i]);
        out += ',';
        out += format_sci(tab.c_exact[i]);
        out += ',';
        out += format_sci(tab.c_rwa[i]);
        out += ',';
        out += format_sci(tab.c_transformed[i]);
        out += ',';
        out += format_sci(tab.photon1[i]);
        out += ',';
        out += format_sci(tab.photon2[i]);
        out += ',';
        out += format_sci(tab.norm_error[i]);
        out += '\n';
    }
    return out;
}

std::string series_csv(const ConcurrenceSeries& series, const std::string& source_label) {
    std::string out;
    out += source_label.empty() ? "t,C,n_ph1,n_ph2,norm_err\n"
                                : "source,t,C,n_ph1,n_ph2,norm_err\n";
    for (std::size_t i = 0; i < series.times.size(); ++i) {
        if (!source_label.empty()) {
            out += source_label;
            out += ',';
        }
        out += format_sci(series.times[i]);
        out += ',';
        out += format_sci(series.concurrence[i]);
        out += ',';
        out += format_sci(series.photon1[i]);
        out += ',';
        out += format_sci(series.photon2[i]);
        out += ',';
        out += format_sci(series.norm_error[i]);
        out += '\n';
    }
    return out;
}

std::string spectrum_csv(const DisplacedSpectrum& spec) {
    std::string out = "index,parity,energy,n_tr\n";
    for (std::size_t i = 0; i < spec.levels.size(); ++i) {
        out += std::to_string(i);
        out += ',';
        out += (spec.levels[i].parity == Parity::plus) ? "+1" : "-1";
        out += ',';
        out += format_sci(spec.levels[i].energy);
        out += ',';
        out += std::to_string(spec.n_tr);
        out += '\n';
    }
    return out;
}

std::string esd_json(const std::vector<EsdInterval>& intervals) {
    nlohmann::json list = nlohmann::json::array();
    for (const EsdInterval& iv : intervals)
        list.push_back({{"t_start", iv.t_start}, {"t_end", iv.t_end}});
    return nlohmann::json{{"esd_intervals", list}}.dump(2) + "\n";
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::string out = "g,g2,delta,alpha,t,C\n";
    for (const SweepRow& r : rows) {
        out += format_sci(r.g);
        out += ',';
        out += format_sci(r.g2);
        out += ',';
        out += format_sci(r.delta);
        out += ',';
        out += format_sci(r.alpha);
        out += ',';
        out += format_sci(r.t);
        out += ',';
        out += format_sci(r.concurrence);
        out += '\n';
    }
    return out;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file '" + path + "'");
    out << content;
    if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

} // namespace qrabi::io
