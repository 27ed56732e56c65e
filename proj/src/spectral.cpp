#include "qrabi/spectral.hpp"

#include <cmath>
#include <sstream>

namespace qrabi {

SymmetricEig symmetric_eig(const Eigen::MatrixXd& matrix) {
    if (matrix.rows() != matrix.cols())
        throw std::invalid_argument("symmetric_eig: matrix must be square");
    const double scale = matrix.cwiseAbs().maxCoeff();
    if (matrix.rows() > 1) {
        double asym = (matrix - matrix.transpose()).cwiseAbs().maxCoeff();
        if (asym > 1e-13 * (scale + 1.0))
            throw std::invalid_argument("symmetric_eig: matrix is not symmetric");
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(matrix);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("symmetric_eig: eigensolver did not converge");

    SymmetricEig eig{solver.eigenvalues(), solver.eigenvectors()};

    const double norm_a = std::max(eig.values.cwiseAbs().maxCoeff(), 1e-300);
    const double resid =
        (matrix * eig.vectors - eig.vectors * eig.values.asDiagonal()).colwise().norm().maxCoeff();
    if (resid > 1e-10 * norm_a) {
        std::ostringstream msg;
        msg << "symmetric_eig: residual " << resid << " exceeds 1e-10 * " << norm_a;
        throw std::runtime_error(msg.str());
    }
    const double ortho =
        (eig.vectors.transpose() * eig.vectors -
         Eigen::MatrixXd::Identity(matrix.rows(), matrix.cols()))
            .cwiseAbs()
            .maxCoeff();
    if (ortho > 1e-10)
        throw std::runtime_error("symmetric_eig: eigenvectors lost orthonormality");
    return eig;
}

DisplacedSpectrum solve_subsystem_fixed(const ModelParams& params, int n_tr) {
    DisplacedSpectrum spec;
    spec.params = params;
    spec.n_tr = n_tr;
    spec.retained_per_parity = n_tr + 1;
    spec.levels.reserve(2 * (n_tr + 1));
    for (Parity p : {Parity::plus, Parity::minus}) {
        ParityBlock block = build_parity_block(params, p, n_tr);
        SymmetricEig eig = symmetric_eig(block.matrix);
        for (int i = 0; i <= n_tr; ++i)
            spec.levels.push_back(Level{eig.values[i], p, eig.vectors.col(i)});
    }
    return spec;
}

namespace {

int retained_count(int n_tr) { return (n_tr + 2) / 2; }

double retained_deviation(const DisplacedSpectrum& coarse, const DisplacedSpectrum& fine) {
    const int r = retained_count(coarse.n_tr);
    double dev = 0.0;
    for (Parity p : {Parity::plus, Parity::minus})
        for (int i = 0; i < r; ++i)
            dev = std::max(dev, std::abs(coarse.level(p, i).energy - fine.level(p, i).energy));
    return dev;
}

} // namespace

DisplacedSpectrum solve_subsystem(const ModelParams& params, const TruncationPolicy& policy) {
    params.validate();
    policy.validate();

    int n = policy.n_tr_initial;
    DisplacedSpectrum current = solve_subsystem_fixed(params, n);
    double last_dev = 0.0;
    while (n <= policy.n_tr_max) {
        DisplacedSpectrum doubled = solve_subsystem_fixed(params, 2 * n);
        last_dev = retained_deviation(current, doubled);
        if (last_dev < policy.convergence_tol) {
            current.retained_per_parity = retained_count(n);
            return current;
        }
        n *= 2;
        current = std::move(doubled);
    }
    std::ostringstream msg;
    msg << "solve_subsystem: eigenvalues not converged at n_tr_max=" << policy.n_tr_max
        << " (last deviation " << last_dev << ", tol " << policy.convergence_tol << ")";
    throw NonConvergence(msg.str(), policy.n_tr_max, last_dev);
}

int default_n_fock(int n_tr, double g) {
    return n_tr + static_cast<int>(std::ceil(8.0 * g)) + 16;
}

std::vector<OriginalBasisState> to_original_basis(const DisplacedSpectrum& spec, int n_fock) {
    if (n_fock < spec.n_tr)
        throw std::invalid_argument("to_original_basis: n_fock must be >= n_tr");

    const int dim = spec.n_tr + 1;
    const double g = spec.params.g;

    // |n>_A = D(-g)|n>, |n>_B = D(+g)|n> in the ordinary Fock basis
    const Eigen::MatrixXd d_neg = displacement_matrix(-g, n_fock, dim);
    const Eigen::MatrixXd d_pos = displacement_matrix(+g, n_fock, dim);

    Eigen::VectorXd alternating(dim);
    for (int n = 0; n < dim; ++n) alternating[n] = (n % 2 == 0) ? 1.0 : -1.0;

    std::vector<OriginalBasisState> states;
    states.reserve(spec.levels.size());
    for (std::size_t l = 0; l < spec.levels.size(); ++l) {
        const Level& lev = spec.levels[l];
        const double p = parity_sign(lev.parity);

        Eigen::VectorXd u = d_neg * lev.coeffs;
        Eigen::VectorXd v = -p * (d_pos * alternating.cwiseProduct(lev.coeffs).eval());

        // the ansatz (u; v) carries norm sqrt(2); fold its 1/sqrt(2) into
        // the V^+ rotation
        OriginalBasisState st;
        st.energy = lev.energy;
        st.parity = lev.parity;
        st.phi_up = 0.5 * (u - v);
        st.phi_down = 0.5 * (u + v);

        const double norm2 = st.phi_up.squaredNorm() + st.phi_down.squaredNorm();
        st.norm_loss = std::abs(norm2 - 1.0);
        if (st.norm_loss > 1e-8) {
            std::ostringstream msg;
            msg << "to_original_basis: state " << l << " lost " << st.norm_loss
                << " of its norm at n_fock=" << n_fock;
            throw NormLoss(msg.str(), static_cast<int>(l), st.norm_loss);
        }
        const double inv_norm = 1.0 / std::sqrt(norm2);
        st.phi_up *= inv_norm;
        st.phi_down *= inv_norm;
        states.push_back(std::move(st));
    }
    return states;
}

} // namespace qrabi
