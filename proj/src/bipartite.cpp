#include "qrabi/bipartite.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>

namespace qrabi {

namespace {

using Eigen::Matrix4cd;
using Eigen::VectorXcd;
using complexd = std::complex<double>;

// photon-space vectors of one subsystem at one grid point, by (branch, level)
struct BranchComponents {
    const VectorXcd* f[2][2];  // [branch][atom level]
};

BranchComponents branch_components(const SubsystemTrajectory& up_traj,
                                   const SubsystemTrajectory& down_traj, const BellSpec& bell,
                                   int subsystem, int t_index) {
    BranchComponents bc;
    for (int b = 0; b < 2; ++b) {
        const SubsystemTrajectory& src =
            bell_branch_level(bell, subsystem, b) == AtomLevel::up ? up_traj : down_traj;
        bc.f[b][0] = &src.comp_up.at(t_index);
        bc.f[b][1] = &src.comp_down.at(t_index);
    }
    return bc;
}

// overlap <f[b'][s']|f[b][s]> and <f[b'][s']|n|f[b][s]> tables
struct GramTables {
    complexd plain[2][2][2][2];   // [bp][sp][b][s]
    complexd number[2][2][2][2];
};

GramTables gram_tables(const BranchComponents& bc) {
    GramTables g;
    for (int bp = 0; bp < 2; ++bp)
        for (int sp = 0; sp < 2; ++sp)
            for (int b = 0; b < 2; ++b)
                for (int s = 0; s < 2; ++s) {
                    const VectorXcd& x = *bc.f[bp][sp];
                    const VectorXcd& y = *bc.f[b][s];
                    g.plain[bp][sp][b][s] = x.dot(y);
                    complexd num = 0.0;
                    for (int k = 1; k < x.size(); ++k)
                        num += std::conj(x[k]) * (double(k) * y[k]);
                    g.number[bp][sp][b][s] = num;
                }
    return g;
}

void check_same_grid(const SubsystemTrajectory& a, const SubsystemTrajectory& b) {
    if (a.times != b.times)
        throw GridMismatch("joint_density: trajectories use different time grids");
}

struct JointPoint {
    Matrix4cd rho;  // raw, trace ~ 1
    double n1 = 0.0;
    double n2 = 0.0;
    double trace = 0.0;
};

JointPoint assemble_point(const SubsystemTrajectory& t1u, const SubsystemTrajectory& t1d,
                          const SubsystemTrajectory& t2u, const SubsystemTrajectory& t2d,
                          const BellSpec& bell, int t_index) {
    const BranchComponents bc1 = branch_components(t1u, t1d, bell, 1, t_index);
    const BranchComponents bc2 = branch_components(t2u, t2d, bell, 2, t_index);
    const GramTables g1 = gram_tables(bc1);
    const GramTables g2 = gram_tables(bc2);

    const double w[2] = {bell.weight(0), bell.weight(1)};

    JointPoint out;
    out.rho.setZero();
    for (int s1 = 0; s1 < 2; ++s1)
        for (int s2 = 0; s2 < 2; ++s2)
            for (int s1p = 0; s1p < 2; ++s1p)
                for (int s2p = 0; s2p < 2; ++s2p) {
                    complexd acc = 0.0;
                    for (int b = 0; b < 2; ++b)
                        for (int bp = 0; bp < 2; ++bp)
                            acc += w[b] * w[bp] * g1.plain[bp][s1p][b][s1] *
                                   g2.plain[bp][s2p][b][s2];
                    out.rho(2 * s1 + s2, 2 * s1p + s2p) = acc;
                }
    // <psi|rho basis| ... the contraction above fills <s1 s2| rho |s1' s2'>
    out.rho = (0.5 * (out.rho + out.rho.adjoint())).eval();

    complexd n1 = 0.0, n2 = 0.0, tr = 0.0;
    for (int b = 0; b < 2; ++b)
        for (int bp = 0; bp < 2; ++bp) {
            complexd o1 = 0.0, o2 = 0.0, m1 = 0.0, m2 = 0.0;
            for (int s = 0; s < 2; ++s) {
                o1 += g1.plain[bp][s][b][s];
                o2 += g2.plain[bp][s][b][s];
                m1 += g1.number[bp][s][b][s];
                m2 += g2.number[bp][s][b][s];
            }
            const double ww = w[b] * w[bp];
            n1 += ww * m1 * o2;
            n2 += ww * o1 * m2;
            tr += ww * o1 * o2;
        }
    out.n1 = n1.real();
    out.n2 = n2.real();
    out.trace = tr.real();
    return out;
}

} // namespace

TwoQubitDensity joint_density(const SubsystemTrajectory& traj1_up,
                              const SubsystemTrajectory& traj1_down,
                              const SubsystemTrajectory& traj2_up,
                              const SubsystemTrajectory& traj2_down, const BellSpec& bell,
                              int t_index) {
    check_same_grid(traj1_up, traj1_down);
    check_same_grid(traj1_up, traj2_up);
    check_same_grid(traj1_up, traj2_down);
    return TwoQubitDensity{
        assemble_point(traj1_up, traj1_down, traj2_up, traj2_down, bell, t_index).rho};
}

double wootters_concurrence(const TwoQubitDensity& rho) {
    const Matrix4cd& r = rho.matrix;

    const double herm_err = (r - r.adjoint()).cwiseAbs().maxCoeff();
    if (herm_err > 1e-10) throw InvalidDensity("wootters_concurrence: matrix not Hermitian");
    const double trace_err = std::abs(r.trace() - 1.0);
    if (trace_err > 1e-10) throw InvalidDensity("wootters_concurrence: trace differs from 1");
    Eigen::SelfAdjointEigenSolver<Matrix4cd> psd(r);
    if (psd.eigenvalues().minCoeff() < -1e-10)
        throw InvalidDensity("wootters_concurrence: negative eigenvalue");

    // sy x sy is the antidiagonal (-1, 1, 1, -1)
    Matrix4cd flip = Matrix4cd::Zero();
    flip(0, 3) = -1.0;
    flip(1, 2) = 1.0;
    flip(2, 1) = 1.0;
    flip(3, 0) = -1.0;

    const Matrix4cd m = r * flip * r.conjugate() * flip;
    Eigen::ComplexEigenSolver<Matrix4cd> solver(m, /*computeEigenvectors=*/false);
    Eigen::Vector4d lam = solver.eigenvalues().real();
    for (int i = 0; i < 4; ++i) lam[i] = std::max(lam[i], 0.0);
    std::sort(lam.data(), lam.data() + 4, std::greater<double>());
    const double c =
        std::sqrt(lam[0]) - std::sqrt(lam[1]) - std::sqrt(lam[2]) - std::sqrt(lam[3]);
    return std::max(0.0, c);
}

std::vector<EsdInterval> detect_esd(const std::vector<double>& times,
                                    const std::vector<double>& concurrence,
                                    double zero_threshold) {
    if (times.size() != concurrence.size())
        throw std::invalid_argument("detect_esd: times/concurrence size mismatch");
    if (!(zero_threshold > 0.0))
        throw std::invalid_argument("detect_esd: threshold must be positive");

    std::vector<EsdInterval> intervals;
    const int n = static_cast<int>(times.size());
    int run_start = -1;
    for (int i = 0; i <= n; ++i) {
        const bool dead = i < n && concurrence[i] <= zero_threshold;
        if (dead && run_start < 0) run_start = i;
        if (!dead && run_start >= 0) {
            if (i - run_start >= kEsdMinSamples)
                intervals.push_back(EsdInterval{times[run_start], times[i - 1]});
            run_start = -1;
        }
    }
    return intervals;
}

namespace {

ConcurrenceSeries series_from_spectra(const DisplacedSpectrum& spec1,
                                      const DisplacedSpectrum& spec2, const BellSpec& bell,
                                      const std::vector<double>& times) {
    const SubsystemTrajectory t1u = evolve_subsystem(spec1, AtomLevel::up, times);
    const SubsystemTrajectory t1d = evolve_subsystem(spec1, AtomLevel::down, times);
    const SubsystemTrajectory t2u = evolve_subsystem(spec2, AtomLevel::up, times);
    const SubsystemTrajectory t2d = evolve_subsystem(spec2, AtomLevel::down, times);

    ConcurrenceSeries series;
    series.times = times;
    series.n_tr1 = spec1.n_tr;
    series.n_tr2 = spec2.n_tr;
    const int n = static_cast<int>(times.size());
    series.concurrence.resize(n);
    series.photon1.resize(n);
    series.photon2.resize(n);
    series.norm_error.resize(n);
    for (int i = 0; i < n; ++i) {
        JointPoint pt = assemble_point(t1u, t1d, t2u, t2d, bell, i);
        series.concurrence[i] = wootters_concurrence(TwoQubitDensity{pt.rho});
        series.photon1[i] = pt.n1;
        series.photon2[i] = pt.n2;
        series.norm_error[i] = std::abs(pt.trace - 1.0);
    }
    series.esd_intervals = detect_esd(series.times, series.concurrence);
    return series;
}

double curve_deviation(const ConcurrenceSeries& a, const ConcurrenceSeries& b) {
    double dev = 0.0;
    for (std::size_t i = 0; i < a.concurrence.size(); ++i)
        dev = std::max(dev, std::abs(a.concurrence[i] - b.concurrence[i]));
    return dev;
}

} // namespace

ConcurrenceSeries concurrence_series_fixed(const ModelParams& params1,
                                           const ModelParams& params2, const BellSpec& bell,
                                           const std::vector<double>& times, int n_tr1,
                                           int n_tr2) {
    return series_from_spectra(solve_subsystem_fixed(params1, n_tr1),
                               solve_subsystem_fixed(params2, n_tr2), bell, times);
}

ConcurrenceSeries concurrence_series(const ModelParams& params1, const ModelParams& params2,
                                     const BellSpec& bell, const std::vector<double>& times,
                                     const TruncationPolicy& policy) {
    params1.validate();
    params2.validate();
    policy.validate();

    const DisplacedSpectrum spec1 = solve_subsystem(params1, policy);
    const DisplacedSpectrum spec2 = solve_subsystem(params2, policy);
    ConcurrenceSeries current = series_from_spectra(spec1, spec2, bell, times);
    if (policy.observable != ConvergenceObservable::concurrence) return current;

    int n1 = spec1.n_tr;
    int n2 = spec2.n_tr;
    double last_dev = 0.0;
    while (std::max(n1, n2) <= policy.n_tr_max) {
        ConcurrenceSeries doubled =
            concurrence_series_fixed(params1, params2, bell, times, 2 * n1, 2 * n2);
        last_dev = curve_deviation(current, doubled);
        if (last_dev < policy.convergence_tol) return current;
        n1 *= 2;
        n2 *= 2;
        current = std::move(doubled);
    }
    std::ostringstream msg;
    msg << "concurrence_series: curve not converged at n_tr_max=" << policy.n_tr_max
        << " (last deviation " << last_dev << ")";
    throw NonConvergence(msg.str(), policy.n_tr_max, last_dev);
}

std::vector<double> uniform_grid(double t_max, int n_steps) {
    if (!(t_max > 0.0)) throw ConfigError("time grid: t_max must be positive");
    if (n_steps < 2) throw ConfigError("time grid: n_steps must be >= 2");
    std::vector<double> t(n_steps);
    for (int i = 0; i < n_steps; ++i) t[i] = t_max * i / (n_steps - 1);
    return t;
}

} // namespace qrabi
