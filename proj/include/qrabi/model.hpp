#pragma once

#include <Eigen/Dense>

#include "qrabi/errors.hpp"

// Single-mode quantum Rabi subsystem: physical parameters and the matrix
// ingredients of the displaced-basis eigenproblem.

namespace qrabi {

inline constexpr double kPi = 3.141592653589793238462643383279502884;

struct ModelParams {
    double omega = 1.0;       // cavity frequency (hbar = 1)
    double delta_atom = 1.0;  // atomic level splitting
    double g = 0.0;           // dimensionless coupling lambda/omega
    double alpha = kPi / 4;   // Bell mixing angle (radians)

    // detuning = omega - delta_atom, always recomputed
    double detuning() const { return omega - delta_atom; }
    // coupling in energy units
    double lambda() const { return g * omega; }

    static ModelParams from_detuning(double omega, double detuning, double g,
                                     double alpha = kPi / 4) {
        return ModelParams{omega, omega - detuning, g, alpha};
    }

    bool operator==(const ModelParams&) const = default;

    void validate() const {
        if (omega <= 0.0) throw ConfigError("ModelParams: omega must be positive");
        if (g < 0.0) throw ConfigError("ModelParams: g must be nonnegative");
        if (!(std::isfinite(omega) && std::isfinite(delta_atom) &&
              std::isfinite(g) && std::isfinite(alpha)))
            throw ConfigError("ModelParams: non-finite field");
    }
};

enum class Parity : int { plus = +1, minus = -1 };

inline int parity_sign(Parity p) { return static_cast<int>(p); }

struct ParityBlock {
    Parity sign = Parity::plus;
    int dim = 0;  // n_tr + 1
    Eigen::MatrixXd matrix;
};

enum class ConvergenceObservable { concurrence, spectrum };

struct TruncationPolicy {
    int n_tr_initial = 16;
    int n_tr_max = 256;
    double convergence_tol = 1e-9;
    ConvergenceObservable observable = ConvergenceObservable::concurrence;

    bool operator==(const TruncationPolicy&) const = default;

    void validate() const {
        if (n_tr_initial < 4) throw ConfigError("TruncationPolicy: n_tr_initial must be >= 4");
        if (n_tr_max < n_tr_initial)
            throw ConfigError("TruncationPolicy: n_tr_max must be >= n_tr_initial");
        if (!(convergence_tol > 0.0))
            throw ConfigError("TruncationPolicy: convergence_tol must be positive");
    }
};

// Overlap D_{mn} between the two displaced-Fock families of the parity
// ansatz, displaced by -g and +g with alternating signs on the second
// family.  Symmetric in (m, n); reduces to (-1)^m delta_{mn} at g = 0.
// Evaluated through log-Gamma accumulated terms with sign tracking,
// summed in descending magnitude; stable for indices up to a few hundred.
double displacement_overlap(int m, int n, double g);

// Full (n+1)x(n+1) overlap matrix [D_{mn}], m,n = 0..n_max.
Eigen::MatrixXd displacement_overlap_matrix(int n_max, double g);

// <k| exp(beta (a^dag - a)) |n> in the Fock basis, via the associated
// Laguerre closed form.
double displacement_matrix_element(double beta, int k, int n);

// Fock-basis matrix [<k|D(beta)|n>], k = 0..n_rows-1, n = 0..n_cols-1.
Eigen::MatrixXd displacement_matrix(double beta, int n_rows, int n_cols);

// H^{(+-)}_{mn} = omega (m - g^2) delta_{mn} +- (Delta/2) D_{mn}
ParityBlock build_parity_block(const ModelParams& params, Parity sign, int n_tr);

} // namespace qrabi
