#pragma once

#include <vector>

#include <Eigen/Dense>

#include "qrabi/model.hpp"

// Per-parity eigenproblems of the displaced basis, truncation convergence,
// and back-transformation to the ordinary atom (x) Fock product basis.

namespace qrabi {

struct Level {
    double energy = 0.0;
    Parity parity = Parity::plus;
    Eigen::VectorXd coeffs;  // displaced-basis coefficients c_n, unit norm
};

struct DisplacedSpectrum {
    ModelParams params;
    int n_tr = 0;
    // plus-parity levels first, then minus, energies ascending within each
    std::vector<Level> levels;
    // lowest levels per parity whose energies passed the doubling check
    int retained_per_parity = 0;

    int levels_per_parity() const { return n_tr + 1; }
    const Level& level(Parity p, int i) const {
        return levels[(p == Parity::plus ? 0 : n_tr + 1) + i];
    }
};

struct SymmetricEig {
    Eigen::VectorXd values;   // ascending
    Eigen::MatrixXd vectors;  // orthonormal columns
};

// Dense symmetric eigendecomposition with residual and orthonormality
// diagnostics; throws std::runtime_error instead of returning garbage.
SymmetricEig symmetric_eig(const Eigen::MatrixXd& matrix);

// Diagonalize both parity blocks at a fixed truncation.
DisplacedSpectrum solve_subsystem_fixed(const ModelParams& params, int n_tr);

// Truncation-convergence driver: grows n_tr by doubling until the retained
// eigenvalues move by less than policy.convergence_tol under one more
// doubling.  Curve-level convergence (observable = concurrence) is enforced
// by the bipartite pipeline on top of this.
DisplacedSpectrum solve_subsystem(const ModelParams& params, const TruncationPolicy& policy);

struct OriginalBasisState {
    double energy = 0.0;
    Parity parity = Parity::plus;
    Eigen::VectorXd phi_up;    // Fock components, atom level up
    Eigen::VectorXd phi_down;  // Fock components, atom level down
    double norm_loss = 0.0;    // |norm^2 - 1| before renormalization
};

// Fock dimension heuristic for back-transformation; displaced states of
// index n have Fock support ~ n + O(g sqrt n).
int default_n_fock(int n_tr, double g);

// Expand each displaced eigenvector over ordinary Fock states, undo the
// pi/4 rotation, and normalize.  Throws NormLoss when n_fock is too small.
std::vector<OriginalBasisState> to_original_basis(const DisplacedSpectrum& spec, int n_fock);

} // namespace qrabi
