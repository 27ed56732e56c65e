#pragma once

#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "qrabi/bell.hpp"
#include "qrabi/dynamics.hpp"

// Two-atom assembly: reduced density matrix, Wootters concurrence,
// entanglement-sudden-death intervals, photon numbers.

namespace qrabi {

inline constexpr double kEsdThreshold = 1e-9;
inline constexpr int kEsdMinSamples = 3;

struct TwoQubitDensity {
    // basis order (uu, ud, du, dd)
    Eigen::Matrix4cd matrix = Eigen::Matrix4cd::Zero();
};

struct EsdInterval {
    double t_start = 0.0;
    double t_end = 0.0;
};

struct ConcurrenceSeries {
    std::vector<double> times;
    std::vector<double> concurrence;
    std::vector<double> photon1;
    std::vector<double> photon2;
    std::vector<double> norm_error;
    std::vector<EsdInterval> esd_intervals;
    int n_tr1 = 0;  // truncation the curve was accepted at
    int n_tr2 = 0;
};

// Reduced two-atom density matrix at one grid point.  traj<i>_<level> is
// subsystem i started from atomic level <level>; all four must share the
// time grid.  The photon registers are traced out by contracting branch
// overlaps, equivalent to the eigenbasis double sum over the joint state.
TwoQubitDensity joint_density(const SubsystemTrajectory& traj1_up,
                              const SubsystemTrajectory& traj1_down,
                              const SubsystemTrajectory& traj2_up,
                              const SubsystemTrajectory& traj2_down, const BellSpec& bell,
                              int t_index);

// max(0, sqrt(l1) - sqrt(l2) - sqrt(l3) - sqrt(l4)) with l_i the eigenvalues
// of rho * (sy x sy) rho^* (sy x sy) in decreasing order.
double wootters_concurrence(const TwoQubitDensity& rho);

// Maximal runs of >= kEsdMinSamples consecutive samples with C <= threshold.
// Isolated transversal zeros are not intervals.
std::vector<EsdInterval> detect_esd(const std::vector<double>& times,
                                    const std::vector<double>& concurrence,
                                    double zero_threshold = kEsdThreshold);

// Full pipeline at fixed truncations (no convergence loop).
ConcurrenceSeries concurrence_series_fixed(const ModelParams& params1,
                                           const ModelParams& params2, const BellSpec& bell,
                                           const std::vector<double>& times, int n_tr1,
                                           int n_tr2);

// Full pipeline: solve both subsystems, evolve the four trajectories, build
// rho(t), concurrence, photon numbers, ESD intervals.  With
// observable = concurrence the truncation is additionally refined until one
// more doubling moves the whole curve by less than policy.convergence_tol.
ConcurrenceSeries concurrence_series(const ModelParams& params1, const ModelParams& params2,
                                     const BellSpec& bell, const std::vector<double>& times,
                                     const TruncationPolicy& policy);

std::vector<double> uniform_grid(double t_max, int n_steps);

} // namespace qrabi
