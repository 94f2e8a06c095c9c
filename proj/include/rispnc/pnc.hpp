#pragma once
// Relay-side denoising map on superposed symbols and UE-side peer recovery.
//
// With both branches arriving at equal real amplitude, the noiseless
// superposed signal per dimension sits on the (2q-1)-level grid
// (2s - 2(q-1)) * scale for digit sums s = d_A + d_B. The relay slices to the
// nearest sum level and reduces it mod q; sums s and s +/- q alias to the
// same network-coded digit by construction.

#include "rispnc/modem.hpp"
#include "rispnc/types.hpp"

namespace rispnc::pnc {

struct NetworkCodedDigit {
    int z_i = 0;
    int z_q = 0;  // unused for BPSK
    friend bool operator==(const NetworkCodedDigit&, const NetworkCodedDigit&) = default;
};

// Ground-truth map: z = (a + b) mod q per dimension. For M = 2 this is XOR.
NetworkCodedDigit map_digits(const modem::DigitPair& a, const modem::DigitPair& b,
                             const modem::Modulation& m);

// Nearest-level decision on the superposed grid of y / branch_gain, then
// mod-q aliasing. Exact midpoints break toward the smaller sum.
// Throws std::domain_error if branch_gain <= 0.
NetworkCodedDigit relay_detect(Complex y, double branch_gain, const modem::Modulation& m);

// peer = (z - own) mod q per dimension; inverts map_digits for either input.
modem::DigitPair recover_peer(const NetworkCodedDigit& z, const modem::DigitPair& own,
                              const modem::Modulation& m);

}  // namespace rispnc::pnc
