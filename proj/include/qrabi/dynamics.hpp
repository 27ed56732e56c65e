#pragma once

#include <vector>

#include <Eigen/Dense>

#include "qrabi/bell.hpp"
#include "qrabi/spectral.hpp"

// Spectral propagation of one atom-cavity subsystem from |level> (x) |vacuum>.

namespace qrabi {

struct SubsystemTrajectory {
    ModelParams params;
    std::vector<double> times;
    int n_fock = 0;
    std::vector<Eigen::VectorXcd> comp_up;    // photon components, atom up
    std::vector<Eigen::VectorXcd> comp_down;  // photon components, atom down
};

// |phi(t)> = sum_l h_l exp(-i E_l t) |phi_l>, h_l = <phi_l | level, vacuum>.
// The initial photon state is the vacuum of the original mode, so only the
// parity sector matching the initial level contributes.
SubsystemTrajectory evolve_subsystem(const DisplacedSpectrum& spec, AtomLevel initial_level,
                                     const std::vector<double>& times);

// <a^dag a> at one grid point
double mean_photon_number(const SubsystemTrajectory& traj, int t_index);

// <H> in the raw Fock basis; conserved diagnostic
double mean_energy(const SubsystemTrajectory& traj, int t_index);

} // namespace qrabi
