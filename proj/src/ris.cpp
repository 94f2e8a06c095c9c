#include "rispnc/ris.hpp"

#include <stdexcept>

namespace rispnc::ris {

namespace {

double wrap_two_pi(double angle) {
    double w = std::fmod(angle, kTwoPi);
    if (w < 0.0) w += kTwoPi;
    if (w >= kTwoPi) w = 0.0;
    return w;
}

}  // namespace

RisPhaseConfig optimal_phases(const ComplexVector& h_est, const ComplexVector& g_est) {
    if (h_est.size() != g_est.size())
        throw std::invalid_argument("channel vectors must have equal length");
    RisPhaseConfig cfg;
    cfg.theta.resize(h_est.size());
    cfg.mu = RealVector::Ones(h_est.size());
    for (Eigen::Index i = 0; i < h_est.size(); ++i) {
        if (h_est[i] == Complex(0.0, 0.0) || g_est[i] == Complex(0.0, 0.0)) {
            cfg.theta[i] = 0.0;
            ++cfg.degenerate_elements;
            continue;
        }
        cfg.theta[i] = wrap_two_pi(-(std::arg(h_est[i]) + std::arg(g_est[i])));
    }
    return cfg;
}

RisPhaseConfig random_phases(Eigen::Index elements, RngStream& rng) {
    if (elements < 1) throw std::invalid_argument("element count must be at least 1");
    RisPhaseConfig cfg;
    cfg.theta.resize(elements);
    cfg.mu = RealVector::Ones(elements);
    for (Eigen::Index i = 0; i < elements; ++i) cfg.theta[i] = rng.uniform(0.0, kTwoPi);
    return cfg;
}

}  // namespace rispnc::ris
