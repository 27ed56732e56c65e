#pragma once

#include <vector>

#include <Eigen/Dense>

#include "qrabi/bell.hpp"
#include "qrabi/model.hpp"

// Brute-force reference path: the Hamiltonian assembled entrywise in the raw
// (atom (x) Fock) basis and propagated by two independent methods.  Used by
// tests and the `validate` subcommand; deliberately shares nothing with the
// displaced-basis engine beyond ModelParams.

namespace qrabi::oracle {

struct RawHamiltonian {
    ModelParams params;
    int n_fock = 0;
    Eigen::MatrixXd matrix;  // dim 2 n_fock, basis (up, down) (x) (0..n_fock-1)
};

RawHamiltonian build_raw_hamiltonian(const ModelParams& params, int n_fock);

// basis index of |level, photon k>
inline int raw_index(AtomLevel level, int k, int n_fock) {
    return (level == AtomLevel::up ? 0 : n_fock) + k;
}

// exp(-i H t) |initial> by full dense eigendecomposition, one vector per time
std::vector<Eigen::VectorXcd> propagate_eig(const RawHamiltonian& raw,
                                            const Eigen::VectorXcd& initial,
                                            const std::vector<double>& times);

// classical RK4 with step-halving error control (local error < 1e-12)
std::vector<Eigen::VectorXcd> propagate_step(const RawHamiltonian& raw,
                                             const Eigen::VectorXcd& initial,
                                             const std::vector<double>& times, double dt_max);

double mean_photon_number(const Eigen::VectorXcd& state, int n_fock);
double mean_energy(const RawHamiltonian& raw, const Eigen::VectorXcd& state);

// weight in the top Fock level over a trajectory; must stay tiny for the
// truncation to be trusted
double tail_mass(const std::vector<Eigen::VectorXcd>& states, int n_fock);

struct JointResult {
    std::vector<double> times;
    std::vector<double> concurrence;
    std::vector<double> photon1;
    std::vector<double> photon2;
    std::vector<Eigen::Matrix4cd> rho;
};

// Two-atom reference: propagate each subsystem in the raw basis, materialize
// the joint vector on the 4 n_fock^2 product space, trace the photon
// registers explicitly, then Wootters.
JointResult joint_dynamics(const ModelParams& params1, const ModelParams& params2,
                           const BellSpec& bell, const std::vector<double>& times, int n_fock);

} // namespace qrabi::oracle
