#include "qrabi/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "qrabi/bipartite.hpp"

namespace qrabi::oracle {

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXcd;
using Eigen::VectorXd;
using complexd = std::complex<double>;
constexpr complexd kI{0.0, 1.0};

void check_initial(const RawHamiltonian& raw, const VectorXcd& initial) {
    if (initial.size() != 2 * raw.n_fock)
        throw std::invalid_argument("oracle propagation: initial state has wrong dimension");
    if (std::abs(initial.norm() - 1.0) > 1e-10)
        throw std::invalid_argument("oracle propagation: initial state must be unit norm");
}

} // namespace

RawHamiltonian build_raw_hamiltonian(const ModelParams& params, int n_fock) {
    params.validate();
    if (n_fock < 2) throw std::invalid_argument("build_raw_hamiltonian: n_fock must be >= 2");

    const int dim = 2 * n_fock;
    const double half_delta = 0.5 * params.delta_atom;
    const double lambda = params.lambda();

    RawHamiltonian raw;
    raw.params = params;
    raw.n_fock = n_fock;
    raw.matrix = MatrixXd::Zero(dim, dim);
    for (int k = 0; k < n_fock; ++k) {
        raw.matrix(k, k) = half_delta + params.omega * k;
        raw.matrix(n_fock + k, n_fock + k) = -half_delta + params.omega * k;
    }
    for (int k = 0; k + 1 < n_fock; ++k) {
        const double v = lambda * std::sqrt(k + 1.0);
        // sigma_x (x) (a + a^dag)
        raw.matrix(k, n_fock + k + 1) = v;
        raw.matrix(n_fock + k + 1, k) = v;
        raw.matrix(k + 1, n_fock + k) = v;
        raw.matrix(n_fock + k, k + 1) = v;
    }
    return raw;
}

std::vector<VectorXcd> propagate_eig(const RawHamiltonian& raw, const VectorXcd& initial,
                                     const std::vector<double>& times) {
    check_initial(raw, initial);

    Eigen::SelfAdjointEigenSolver<MatrixXd> solver(raw.matrix);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("propagate_eig: eigensolver did not converge");
    const MatrixXd& modes = solver.eigenvectors();
    const VectorXd& energies = solver.eigenvalues();

    const VectorXcd weights = modes.transpose() * initial;
    std::vector<VectorXcd> out;
    out.reserve(times.size());
    VectorXcd phased(weights.size());
    for (double t : times) {
        for (int l = 0; l < weights.size(); ++l)
            phased[l] = weights[l] * std::exp(-kI * (energies[l] * t));
        out.push_back(modes * phased);
    }
    return out;
}

namespace {

VectorXcd schrodinger_rhs(const MatrixXd& h, const VectorXcd& psi) {
    return -kI * (h * psi).eval();
}

VectorXcd rk4_step(const MatrixXd& h, const VectorXcd& psi, double dt) {
    const VectorXcd k1 = schrodinger_rhs(h, psi);
    const VectorXcd k2 = schrodinger_rhs(h, psi + 0.5 * dt * k1);
    const VectorXcd k3 = schrodinger_rhs(h, psi + 0.5 * dt * k2);
    const VectorXcd k4 = schrodinger_rhs(h, psi + dt * k3);
    return psi + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

} // namespace

std::vector<VectorXcd> propagate_step(const RawHamiltonian& raw, const VectorXcd& initial,
                                      const std::vector<double>& times, double dt_max) {
    check_initial(raw, initial);
    if (!(dt_max > 0.0)) throw std::invalid_argument("propagate_step: dt_max must be positive");

    constexpr double kLocalTol = 1e-12;
    constexpr double kDtMin = 1e-12;

    std::vector<VectorXcd> out;
    out.reserve(times.size());

    VectorXcd psi = initial;  // state at t = 0
    double t = 0.0;
    for (double target : times) {
        if (target < t - 1e-15)
            throw std::invalid_argument("propagate_step: times must be nondecreasing from 0");
        double dt = dt_max;
        while (target - t > 1e-15) {
            const double step = std::min(dt, target - t);
            const VectorXcd full = rk4_step(raw.matrix, psi, step);
            const VectorXcd half =
                rk4_step(raw.matrix, rk4_step(raw.matrix, psi, 0.5 * step), 0.5 * step);
            const double err = (full - half).norm() / 15.0;
            if (err > kLocalTol) {
                dt = 0.5 * step;
                if (dt < kDtMin) throw StepUnderflow("propagate_step: step size underflow");
                continue;
            }
            psi = half + (half - full) / 15.0;  // Richardson extrapolation
            t += step;
            if (err < kLocalTol / 32.0) dt = std::min(2.0 * step, dt_max);
        }
        t = target;
        out.push_back(psi);
    }
    return out;
}

double mean_photon_number(const VectorXcd& state, int n_fock) {
    double n = 0.0;
    for (int k = 1; k < n_fock; ++k)
        n += k * (std::norm(state[k]) + std::norm(state[n_fock + k]));
    return n;
}

double mean_energy(const RawHamiltonian& raw, const VectorXcd& state) {
    return (state.dot(raw.matrix * state)).real();
}

double tail_mass(const std::vector<VectorXcd>& states, int n_fock) {
    double mass = 0.0;
    for (const VectorXcd& s : states)
        mass = std::max(mass, std::norm(s[n_fock - 1]) + std::norm(s[2 * n_fock - 1]));
    return mass;
}

JointResult joint_dynamics(const ModelParams& params1, const ModelParams& params2,
                           const BellSpec& bell, const std::vector<double>& times,
                           int n_fock) {
    const RawHamiltonian raw1 = build_raw_hamiltonian(params1, n_fock);
    const RawHamiltonian raw2 = build_raw_hamiltonian(params2, n_fock);

    auto initial = [n_fock](AtomLevel level) {
        VectorXcd psi = VectorXcd::Zero(2 * n_fock);
        psi[raw_index(level, 0, n_fock)] = 1.0;
        return psi;
    };

    // one trajectory per (subsystem, initial level)
    const std::vector<VectorXcd> chi1[2] = {propagate_eig(raw1, initial(AtomLevel::up), times),
                                            propagate_eig(raw1, initial(AtomLevel::down), times)};
    const std::vector<VectorXcd> chi2[2] = {propagate_eig(raw2, initial(AtomLevel::up), times),
                                            propagate_eig(raw2, initial(AtomLevel::down), times)};

    auto branch_traj = [&](int subsystem, int branch) -> const std::vector<VectorXcd>& {
        const AtomLevel lvl = bell_branch_level(bell, subsystem, branch);
        const int li = (lvl == AtomLevel::up) ? 0 : 1;
        return subsystem == 1 ? chi1[li] : chi2[li];
    };

    JointResult result;
    result.times = times;
    const int nt = static_cast<int>(times.size());
    result.concurrence.resize(nt);
    result.photon1.resize(nt);
    result.photon2.resize(nt);
    result.rho.resize(nt);

    const double w[2] = {bell.weight(0), bell.weight(1)};
    // joint amplitudes psi[s1, k1, s2, k2], flattened
    std::vector<complexd> joint(std::size_t(4) * n_fock * n_fock);
    const auto at = [&](int s1, int k1, int s2, int k2) -> complexd& {
        return joint[((std::size_t(s1) * n_fock + k1) * 2 + s2) * n_fock + k2];
    };

    for (int it = 0; it < nt; ++it) {
        std::fill(joint.begin(), joint.end(), complexd{0.0, 0.0});
        for (int b = 0; b < 2; ++b) {
            const VectorXcd& a1 = branch_traj(1, b)[it];
            const VectorXcd& a2 = branch_traj(2, b)[it];
            for (int s1 = 0; s1 < 2; ++s1)
                for (int k1 = 0; k1 < n_fock; ++k1) {
                    const complexd amp1 = w[b] * a1[s1 * n_fock + k1];
                    if (amp1 == complexd{0.0, 0.0}) continue;
                    for (int s2 = 0; s2 < 2; ++s2)
                        for (int k2 = 0; k2 < n_fock; ++k2)
                            at(s1, k1, s2, k2) += amp1 * a2[s2 * n_fock + k2];
                }
        }

        // explicit partial trace over both photon registers
        Eigen::Matrix4cd rho = Eigen::Matrix4cd::Zero();
        for (int s1 = 0; s1 < 2; ++s1)
            for (int s2 = 0; s2 < 2; ++s2)
                for (int s1p = 0; s1p < 2; ++s1p)
                    for (int s2p = 0; s2p < 2; ++s2p) {
                        complexd acc = 0.0;
                        for (int k1 = 0; k1 < n_fock; ++k1)
                            for (int k2 = 0; k2 < n_fock; ++k2)
                                acc += at(s1, k1, s2, k2) * std::conj(at(s1p, k1, s2p, k2));
                        rho(2 * s1 + s2, 2 * s1p + s2p) = acc;
                    }
        rho = (0.5 * (rho + rho.adjoint())).eval();

        double n1 = 0.0, n2 = 0.0;
        for (int s1 = 0; s1 < 2; ++s1)
            for (int k1 = 0; k1 < n_fock; ++k1)
                for (int s2 = 0; s2 < 2; ++s2)
                    for (int k2 = 0; k2 < n_fock; ++k2) {
                        const double p = std::norm(at(s1, k1, s2, k2));
                        n1 += k1 * p;
                        n2 += k2 * p;
                    }

        result.rho[it] = rho;
        result.concurrence[it] = wootters_concurrence(TwoQubitDensity{rho});
        result.photon1[it] = n1;
        result.photon2[it] = n2;
    }
    return result;
}

} // namespace qrabi::oracle
