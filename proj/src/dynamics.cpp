#include "qrabi/dynamics.hpp"

#include <cmath>
#include <complex>

namespace qrabi {

namespace {

void check_grid(const std::vector<double>& times) {
    if (times.empty()) throw std::invalid_argument("evolve_subsystem: empty time grid");
    for (std::size_t i = 1; i < times.size(); ++i)
        if (times[i] < times[i - 1])
            throw std::invalid_argument("evolve_subsystem: time grid must be nondecreasing");
}

} // namespace

SubsystemTrajectory evolve_subsystem(const DisplacedSpectrum& spec, AtomLevel initial_level,
                                     const std::vector<double>& times) {
    check_grid(times);

    const int n_fock = default_n_fock(spec.n_tr, spec.params.g);
    const std::vector<OriginalBasisState> states = to_original_basis(spec, n_fock);

    // |up,0> lives in the +1 parity sector, |down,0> in -1
    const Parity sector = (initial_level == AtomLevel::up) ? Parity::plus : Parity::minus;

    const int dim = spec.n_tr + 1;
    Eigen::VectorXd vac_overlaps(dim);  // <0|n>_A = <0|D(-g)|n>
    for (int n = 0; n < dim; ++n)
        vac_overlaps[n] = displacement_matrix_element(-spec.params.g, 0, n);

    // gather the contributing sector: h_l = sum_n c_n <0|n>_A
    std::vector<int> idx;
    idx.reserve(dim);
    for (std::size_t l = 0; l < states.size(); ++l)
        if (states[l].parity == sector) idx.push_back(static_cast<int>(l));

    const int m = static_cast<int>(idx.size());
    Eigen::VectorXd h(m), energy(m);
    Eigen::MatrixXd basis_up(n_fock, m), basis_down(n_fock, m);
    for (int j = 0; j < m; ++j) {
        const OriginalBasisState& st = states[idx[j]];
        h[j] = vac_overlaps.dot(spec.levels[idx[j]].coeffs);
        energy[j] = st.energy;
        basis_up.col(j) = st.phi_up;
        basis_down.col(j) = st.phi_down;
    }

    SubsystemTrajectory traj;
    traj.params = spec.params;
    traj.times = times;
    traj.n_fock = n_fock;
    traj.comp_up.reserve(times.size());
    traj.comp_down.reserve(times.size());

    Eigen::VectorXd wc(m), ws(m);
    for (double t : times) {
        for (int j = 0; j < m; ++j) {
            const double phase = energy[j] * t;
            wc[j] = h[j] * std::cos(phase);
            ws[j] = -h[j] * std::sin(phase);
        }
        Eigen::VectorXcd up(n_fock), down(n_fock);
        up.real() = basis_up * wc;
        up.imag() = basis_up * ws;
        down.real() = basis_down * wc;
        down.imag() = basis_down * ws;
        traj.comp_up.push_back(std::move(up));
        traj.comp_down.push_back(std::move(down));
    }
    return traj;
}

double mean_photon_number(const SubsystemTrajectory& traj, int t_index) {
    const auto& up = traj.comp_up.at(t_index);
    const auto& down = traj.comp_down.at(t_index);
    double n = 0.0;
    for (int k = 1; k < traj.n_fock; ++k)
        n += k * (std::norm(up[k]) + std::norm(down[k]));
    return n;
}

double mean_energy(const SubsystemTrajectory& traj, int t_index) {
    const auto& up = traj.comp_up.at(t_index);
    const auto& down = traj.comp_down.at(t_index);
    const double omega = traj.params.omega;
    const double half_delta = 0.5 * traj.params.delta_atom;
    const double lambda = traj.params.lambda();

    double e = half_delta * (up.squaredNorm() - down.squaredNorm());
    for (int k = 0; k < traj.n_fock; ++k)
        e += omega * k * (std::norm(up[k]) + std::norm(down[k]));

    // 2 lambda Re <up| a + a^dag |down>
    std::complex<double> cross = 0.0;
    for (int k = 0; k + 1 < traj.n_fock; ++k) {
        const double s = std::sqrt(k + 1.0);
        cross += std::conj(up[k]) * s * down[k + 1];   // a
        cross += std::conj(up[k + 1]) * s * down[k];   // a^dag
    }
    e += 2.0 * lambda * cross.real();
    return e;
}

} // namespace qrabi
