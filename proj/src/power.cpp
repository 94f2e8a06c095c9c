#include "rispnc/power.hpp"

namespace rispnc::power {

PowerAllocation allocate(Complex alpha_a, Complex alpha_b, double p_max_watts) {
    if (!(p_max_watts > 0.0)) throw std::domain_error("p_max must be positive");
    const double mag_a = std::abs(alpha_a);
    const double mag_b = std::abs(alpha_b);
    if (mag_a == 0.0 || mag_b == 0.0)
        throw AllocationError("effective gain is zero; arrival powers cannot be equalized");

    PowerAllocation alloc;
    alloc.p_max = p_max_watts;
    if (mag_a == mag_b) {
        alloc.gamma = 1.0;
        alloc.p_a = p_max_watts;
        alloc.p_b = p_max_watts;
        return alloc;
    }
    const double weak = std::min(mag_a, mag_b);
    const double strong = std::max(mag_a, mag_b);
    alloc.gamma = weak / strong;
    const double scaled = alloc.gamma * alloc.gamma * p_max_watts;
    alloc.p_a = mag_a > mag_b ? scaled : p_max_watts;
    alloc.p_b = mag_a > mag_b ? p_max_watts : scaled;
    return alloc;
}

}  // namespace rispnc::power
