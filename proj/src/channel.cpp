#include "rispnc/channel.hpp"

#include <stdexcept>

namespace rispnc::channel {

double free_space_path_loss(double distance_m, double carrier_hz) {
    if (!(distance_m > 0.0) || !(carrier_hz > 0.0))
        throw std::domain_error("free_space_path_loss requires positive distance and frequency");
    const double a = kSpeedOfLight / (4.0 * std::numbers::pi * distance_m * carrier_hz);
    return a * a;
}

namespace {

SideChannel sample_side(double pl_h, double pl_g, Eigen::Index elements, RngStream& rng,
                        Fading fading) {
    SideChannel side;
    side.pl_h = pl_h;
    side.pl_g = pl_g;
    side.h.resize(elements);
    side.g.resize(elements);
    const double amp_h = std::sqrt(pl_h);
    const double amp_g = std::sqrt(pl_g);
    if (fading == Fading::Unit) {
        side.h.setConstant(Complex(amp_h, 0.0));
        side.g.setConstant(Complex(amp_g, 0.0));
    } else {
        for (Eigen::Index i = 0; i < elements; ++i) side.h[i] = amp_h * rng.complex_gaussian(1.0);
        for (Eigen::Index i = 0; i < elements; ++i) side.g[i] = amp_g * rng.complex_gaussian(1.0);
    }
    side.h_est = side.h;
    side.g_est = side.g;
    return side;
}

}  // namespace

ChannelRealization sample_realization(const NodeGeometry& geom, Eigen::Index elements,
                                      RngStream& rng, Fading fading) {
    if (elements < 1) throw std::invalid_argument("element count must be at least 1");
    const double f = geom.carrier_hz;
    ChannelRealization real;
    real.a = sample_side(free_space_path_loss((geom.ue_a - geom.ris_a).norm(), f),
                         free_space_path_loss((geom.ris_a - geom.relay).norm(), f), elements,
                         rng, fading);
    real.b = sample_side(free_space_path_loss((geom.ue_b - geom.ris_b).norm(), f),
                         free_space_path_loss((geom.ris_b - geom.relay).norm(), f), elements,
                         rng, fading);
    return real;
}

double CeeSpec::linear_variance(double link_power) const {
    if (mode == CeeMode::Absolute) return dbm_to_watts(value_db);
    return db_to_linear(value_db) * link_power;
}

namespace {

void corrupt(const ComplexVector& truth, ComplexVector& est, double variance, RngStream& rng) {
    est = truth;
    if (variance <= 0.0) return;
    for (Eigen::Index i = 0; i < truth.size(); ++i) est[i] += rng.complex_gaussian(variance);
}

}  // namespace

ChannelRealization apply_cee(const ChannelRealization& real, const CeeSpec& spec,
                             RngStream& rng) {
    ChannelRealization out = real;
    const auto elems = static_cast<double>(real.a.h.size());
    corrupt(real.a.h, out.a.h_est, spec.linear_variance(elems * real.a.pl_h), rng);
    corrupt(real.a.g, out.a.g_est, spec.linear_variance(elems * real.a.pl_g), rng);
    corrupt(real.b.h, out.b.h_est, spec.linear_variance(elems * real.b.pl_h), rng);
    corrupt(real.b.g, out.b.g_est, spec.linear_variance(elems * real.b.pl_g), rng);
    return out;
}

}  // namespace rispnc::channel
