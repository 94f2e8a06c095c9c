#pragma once
// Cascaded UE -> RIS -> relay channel realizations.
//
// Each per-element coefficient is sqrt(pl) times a unit-variance fading term;
// pl is free-space path loss of the corresponding link at the carrier
// frequency. Fading is block-static per PNC round and i.i.d. across rounds,
// elements, and sides. Channel estimation error is injected additively on the
// raw (path-loss-inclusive) coefficients; the true vectors stay untouched.

#include "rispnc/rng.hpp"
#include "rispnc/types.hpp"

namespace rispnc::channel {

struct NodeGeometry {
    Eigen::Vector3d ue_a{0.0, 2.0, 1.5};
    Eigen::Vector3d ue_b{0.0, 30.0, 1.5};
    Eigen::Vector3d ris_a{0.0, 8.0, 2.5};
    Eigen::Vector3d ris_b{0.0, 22.0, 2.5};
    Eigen::Vector3d relay{0.0, 14.0, 2.0};
    double carrier_hz = 28.0e9;
};

// (c / (4 pi d f))^2. Throws std::domain_error on non-positive inputs.
double free_space_path_loss(double distance_m, double carrier_hz);

enum class Fading {
    Rayleigh,  // unit-variance complex Gaussian per element
    Unit,      // deterministic unit gain (AWGN reference links)
};

struct SideChannel {
    ComplexVector h;      // UE -> RIS, one coefficient per element
    ComplexVector g;      // RIS -> relay
    ComplexVector h_est;  // estimates available to the RIS controller
    ComplexVector g_est;
    double pl_h = 0.0;  // path-loss power factors of the two hops
    double pl_g = 0.0;
};

struct ChannelRealization {
    SideChannel a;
    SideChannel b;
};

// Draw order is fixed: h_a, g_a, h_b, g_b, one element at a time.
// Estimates start equal to the true coefficients.
ChannelRealization sample_realization(const NodeGeometry& geom, Eigen::Index elements,
                                      RngStream& rng, Fading fading = Fading::Rayleigh);

enum class CeeMode {
    // Per-element error variance relative to the mean power of the corrupted
    // link vector, E||h||^2 = elements * pl. Matches a fixed pilot budget
    // spread over the surface: more elements, proportionally noisier
    // per-element estimates. This is the default.
    Relative,
    // value_db read as dBm of absolute error power: 10^((value_db - 30) / 10).
    Absolute,
};

struct CeeSpec {
    double value_db = -110.0;
    CeeMode mode = CeeMode::Relative;

    // link_power is the reference for Relative mode (ignored by Absolute).
    double linear_variance(double link_power) const;
};

// Returns a copy whose h_est/g_est carry independent CN(0, var) error per
// element and per side. Draw order: e_h_a, e_g_a, e_h_b, e_g_b.
ChannelRealization apply_cee(const ChannelRealization& real, const CeeSpec& spec,
                             RngStream& rng);

}  // namespace rispnc::channel
