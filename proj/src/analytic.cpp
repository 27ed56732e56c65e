#include "qrabi/analytic.hpp"

#include <cmath>

namespace qrabi {

namespace {

// N and nu from a detuning/coupling pair; handles the g -> 0 limits
void oscillation_factors(double detuning, double coupling, double& n_factor, double& nu) {
    if (coupling == 0.0) {
        n_factor = (detuning == 0.0) ? 0.5 : 0.0;
        nu = std::abs(detuning);
        return;
    }
    const double ratio = detuning / (2.0 * coupling);
    n_factor = 0.5 / std::sqrt(1.0 + ratio * ratio);
    nu = std::hypot(detuning, 2.0 * coupling);
}

double bell1_curve(double n_factor, double nu, double alpha, double t) {
    const double s = std::sin(0.5 * nu * t);
    return std::abs(std::sin(2.0 * alpha)) * (1.0 - 4.0 * n_factor * n_factor * s * s);
}

double bell2_curve(double n_factor, double nu, double alpha, double t) {
    const double s2 = std::pow(std::sin(0.5 * nu * t), 2);
    const double q = 4.0 * n_factor * n_factor * s2;
    const double c = (1.0 - q) * (std::abs(std::sin(2.0 * alpha)) -
                                  2.0 * q * std::pow(std::cos(alpha), 2));
    return std::max(0.0, c);
}

} // namespace

EffectiveParams effective_params(const ModelParams& params) {
    params.validate();
    const double omega = params.omega;
    const double delta = params.delta_atom;
    const double detuning = params.detuning();
    const double lambda = params.lambda();

    if (omega + delta == 0.0)
        throw std::invalid_argument("effective_params: omega + delta_atom must not vanish");

    EffectiveParams eff;
    const double denom = omega + delta;  // = 2 omega - detuning
    eff.delta_eff = delta * (1.0 - 2.0 * lambda * lambda / (denom * denom));
    eff.g_eff = lambda * (2.0 * delta / denom);
    eff.detuning_eff = omega - eff.delta_eff;
    oscillation_factors(eff.detuning_eff, eff.g_eff, eff.n_factor, eff.nu);
    return eff;
}

double concurrence_bell1_transformed(const ModelParams& params, double alpha, double t) {
    const EffectiveParams eff = effective_params(params);
    return bell1_curve(eff.n_factor, eff.nu, alpha, t);
}

double concurrence_bell2_transformed(const ModelParams& params, double alpha, double t) {
    const EffectiveParams eff = effective_params(params);
    return bell2_curve(eff.n_factor, eff.nu, alpha, t);
}

bool esd_predicate(const ModelParams& params, double alpha, double t) {
    const EffectiveParams eff = effective_params(params);
    const double s = std::sin(0.5 * eff.nu * t);
    return std::abs(std::tan(alpha)) < 4.0 * eff.n_factor * eff.n_factor * s * s;
}

double concurrence_rwa(const ModelParams& params, const BellSpec& bell, double t) {
    params.validate();
    double n_factor, nu;
    oscillation_factors(params.detuning(), params.lambda(), n_factor, nu);
    return bell.kind == BellKind::bell1 ? bell1_curve(n_factor, nu, bell.alpha, t)
                                        : bell2_curve(n_factor, nu, bell.alpha, t);
}

} // namespace qrabi
