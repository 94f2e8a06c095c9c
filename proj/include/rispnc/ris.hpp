#pragma once
// RIS phase-shift configuration and the effective cascaded gain.
//
// Phases are computed from the channel estimates but applied to the true
// channels in effective_gain; with perfect estimates and optimal phases the
// gain collapses to the real positive sum of per-element magnitude products.

#include "rispnc/rng.hpp"
#include "rispnc/types.hpp"

namespace rispnc::ris {

struct RisPhaseConfig {
    RealVector theta;  // per-element phase shift in [0, 2pi)
    RealVector mu;     // per-element amplitude in [0, 1], fixed at 1 here
    Eigen::Index degenerate_elements = 0;  // zero-coefficient fallbacks taken
};

// theta_i = -(arg h_i + arg g_i) wrapped to [0, 2pi), mu_i = 1. A coefficient
// that is exactly zero has no defined angle; such elements get theta_i = 0
// and are counted in degenerate_elements.
RisPhaseConfig optimal_phases(const ComplexVector& h_est, const ComplexVector& g_est);

// theta_i i.i.d. uniform on [0, 2pi), mu_i = 1.
RisPhaseConfig random_phases(Eigen::Index elements, RngStream& rng);

// alpha = sum_i g_i * mu_i * e^{j theta_i} * h_i.
template <typename DerivedH, typename DerivedG>
Complex effective_gain(const Eigen::MatrixBase<DerivedH>& h,
                       const Eigen::MatrixBase<DerivedG>& g, const RisPhaseConfig& cfg) {
    const auto unit = (Complex(0.0, 1.0) * cfg.theta.array().cast<Complex>()).exp();
    return (g.array() * cfg.mu.array().cast<Complex>() * unit * h.array()).sum();
}

}  // namespace rispnc::ris
