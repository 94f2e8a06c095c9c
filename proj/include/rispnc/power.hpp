#pragma once
// UE power allocation: equalize the arrival amplitudes of the two superposed
// branches at the relay under a per-UE power cap. The UE with the weaker
// effective gain transmits at P_max, the other at gamma^2 * P_max with
// gamma = |alpha_weak| / |alpha_strong|.

#include <stdexcept>

#include "rispnc/types.hpp"

namespace rispnc::power {

struct AllocationError : std::domain_error {
    using std::domain_error::domain_error;
};

struct PowerAllocation {
    double p_a = 0.0;    // watts
    double p_b = 0.0;    // watts
    double gamma = 1.0;  // |alpha_weak| / |alpha_strong|, in (0, 1]
    double p_max = 0.0;  // watts
};

// Throws AllocationError when either gain magnitude is zero (the caller drops
// and counts the round), std::domain_error when p_max_watts <= 0.
PowerAllocation allocate(Complex alpha_a, Complex alpha_b, double p_max_watts);

}  // namespace rispnc::power
