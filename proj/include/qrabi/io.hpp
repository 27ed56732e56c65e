#pragma once

#include <string>
#include <vector>

#include "qrabi/bipartite.hpp"
#include "qrabi/spectral.hpp"

// CSV/JSON emission.  All CSV output: comma-separated, header row, LF line
// endings, 12-significant-digit scientific floats, locale independent.

namespace qrabi::io {

std::string format_sci(double v);

struct DynamicsTable {
    std::vector<double> times;
    std::vector<double> c_exact;
    std::vector<double> c_rwa;
    std::vector<double> c_transformed;
    std::vector<double> photon1;
    std::vector<double> photon2;
    std::vector<double> norm_error;
};

std::string dynamics_csv(const DynamicsTable& table);

// t,C,n_ph1,n_ph2,norm_err; a leading `source` column when label is nonempty
std::string series_csv(const ConcurrenceSeries& series, const std::string& source_label = "");

std::string spectrum_csv(const DisplacedSpectrum& spec);

std::string esd_json(const std::vector<EsdInterval>& intervals);

struct SweepRow {
    double g = 0.0;
    double g2 = 0.0;
    double delta = 0.0;
    double alpha = 0.0;
    double t = 0.0;
    double concurrence = 0.0;
};

std::string sweep_csv(const std::vector<SweepRow>& rows);

void write_file(const std::string& path, const std::string& content);

} // namespace qrabi::io
