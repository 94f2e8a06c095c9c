#pragma once
// OFDM symbol assembly and disassembly: 64 subcarriers (48 data, 4 pilot,
// 12 null), cyclic prefix of 16 samples, unitary transforms both ways so
// per-sample signal power and noise variance carry through unchanged.

#include <utility>

#include "rispnc/types.hpp"

namespace rispnc::ofdm {

struct OfdmGrid {
    static constexpr int kFftSize = 64;
    static constexpr int kCpLen = 16;
    static constexpr int kDataCount = 48;
    static constexpr int kPilotCount = 4;

    IndexVector data_bins;   // 48 DFT bin indices
    IndexVector pilot_bins;  // 4 DFT bin indices
    IndexVector null_bins;   // the remaining 12
};

// Validates cardinalities, range, and disjointness; null bins are the
// complement. Throws std::invalid_argument on violations.
OfdmGrid make_grid(const IndexVector& data_bins, const IndexVector& pilot_bins);

// 802.11-style layout: logical subcarriers -26..26 in use, pilots at
// +-7 and +-21, DC and band edges null. Logical index k maps to DFT bin
// k mod 64. Data bins are ordered by logical index.
const OfdmGrid& grid_80211();

// Fixed pilot polarity sequence {1, 1, 1, -1}.
ComplexVector default_pilots();

// Place values on their bins, zeros on nulls, inverse unitary transform,
// prepend the last kCpLen samples as cyclic prefix. Returns 80 samples.
// Throws std::invalid_argument on wrong input sizes.
ComplexVector assemble(const Eigen::Ref<const ComplexVector>& data_symbols,
                       const Eigen::Ref<const ComplexVector>& pilots, const OfdmGrid& grid);

// Drop the cyclic prefix, forward unitary transform, extract (data, pilots).
std::pair<ComplexVector, ComplexVector> disassemble(const Eigen::Ref<const ComplexVector>& rx,
                                                    const OfdmGrid& grid);

}  // namespace rispnc::ofdm
