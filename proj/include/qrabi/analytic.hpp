#pragma once

#include "qrabi/bell.hpp"
#include "qrabi/model.hpp"

// Closed-form baselines: the counter-rotating-eliminated (unitary
// transformation) concurrence and the plain RWA curves.

namespace qrabi {

struct EffectiveParams {
    double delta_eff = 0.0;     // renormalized atomic splitting
    double g_eff = 0.0;         // renormalized coupling (energy units)
    double detuning_eff = 0.0;  // omega - delta_eff
    double n_factor = 0.5;      // N
    double nu = 0.0;            // oscillation angular frequency

    // negative renormalized splitting signals couplings far outside the
    // transformation's validity window
    bool outside_validity_window() const { return delta_eff < 0.0; }
};

EffectiveParams effective_params(const ModelParams& params);

// C(t) = |sin 2a| [1 - 4 N^2 sin^2(nu t / 2)]; never reaches zero
double concurrence_bell1_transformed(const ModelParams& params, double alpha, double t);

// C(t) = max(0, [1 - 4 N^2 sin^2(nu t/2)] (|sin 2a| - 8 N^2 sin^2(nu t/2) cos^2 a))
double concurrence_bell2_transformed(const ModelParams& params, double alpha, double t);

// |tan a| < 4 N^2 sin^2(nu t / 2)
bool esd_predicate(const ModelParams& params, double alpha, double t);

inline double concurrence_transformed(const ModelParams& params, const BellSpec& bell,
                                      double t) {
    return bell.kind == BellKind::bell1
               ? concurrence_bell1_transformed(params, bell.alpha, t)
               : concurrence_bell2_transformed(params, bell.alpha, t);
}

// Same closed forms with the bare detuning and coupling (no counter-rotating
// renormalization): N = 1/2 and nu = 2 lambda at resonance.
double concurrence_rwa(const ModelParams& params, const BellSpec& bell, double t);

} // namespace qrabi
