#include "rispnc/ofdm.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <vector>

#include <unsupported/Eigen/FFT>

namespace rispnc::ofdm {

namespace {

Eigen::FFT<double>& fft_engine() {
    thread_local Eigen::FFT<double> fft;
    return fft;
}

// Unitary transforms: Eigen's fwd is unscaled, inv carries 1/N.
ComplexVector unitary_fft(const ComplexVector& x) {
    ComplexVector out;
    fft_engine().fwd(out, x);
    return out / std::sqrt(double(x.size()));
}

ComplexVector unitary_ifft(const ComplexVector& x) {
    ComplexVector out;
    fft_engine().inv(out, x);
    return out * std::sqrt(double(x.size()));
}

}  // namespace

OfdmGrid make_grid(const IndexVector& data_bins, const IndexVector& pilot_bins) {
    if (data_bins.size() != OfdmGrid::kDataCount || pilot_bins.size() != OfdmGrid::kPilotCount)
        throw std::invalid_argument("grid needs exactly 48 data and 4 pilot bins");
    std::array<int, OfdmGrid::kFftSize> use{};
    auto claim = [&use](const IndexVector& bins) {
        for (Eigen::Index i = 0; i < bins.size(); ++i) {
            const int b = bins[i];
            if (b < 0 || b >= OfdmGrid::kFftSize)
                throw std::invalid_argument("bin index out of range: " + std::to_string(b));
            if (use[b]++) throw std::invalid_argument("bin assigned twice: " + std::to_string(b));
        }
    };
    claim(data_bins);
    claim(pilot_bins);

    OfdmGrid grid;
    grid.data_bins = data_bins;
    grid.pilot_bins = pilot_bins;
    grid.null_bins.resize(OfdmGrid::kFftSize - OfdmGrid::kDataCount - OfdmGrid::kPilotCount);
    Eigen::Index n = 0;
    for (int b = 0; b < OfdmGrid::kFftSize; ++b)
        if (!use[b]) grid.null_bins[n++] = b;
    return grid;
}

const OfdmGrid& grid_80211() {
    static const OfdmGrid grid = [] {
        const std::array<int, 4> pilots_logical{-21, -7, 7, 21};
        IndexVector data(OfdmGrid::kDataCount), pilot(OfdmGrid::kPilotCount);
        Eigen::Index nd = 0, np = 0;
        for (int k = -26; k <= 26; ++k) {
            if (k == 0) continue;
            const int bin = k < 0 ? k + OfdmGrid::kFftSize : k;
            if (std::find(pilots_logical.begin(), pilots_logical.end(), k) != pilots_logical.end())
                pilot[np++] = bin;
            else
                data[nd++] = bin;
        }
        return make_grid(data, pilot);
    }();
    return grid;
}

ComplexVector default_pilots() {
    ComplexVector p(OfdmGrid::kPilotCount);
    p << 1.0, 1.0, 1.0, -1.0;
    return p;
}

ComplexVector assemble(const Eigen::Ref<const ComplexVector>& data_symbols,
                       const Eigen::Ref<const ComplexVector>& pilots, const OfdmGrid& grid) {
    if (data_symbols.size() != grid.data_bins.size())
        throw std::invalid_argument("expected 48 data symbols");
    if (pilots.size() != grid.pilot_bins.size())
        throw std::invalid_argument("expected 4 pilot symbols");

    ComplexVector freq = ComplexVector::Zero(OfdmGrid::kFftSize);
    for (Eigen::Index i = 0; i < grid.data_bins.size(); ++i)
        freq[grid.data_bins[i]] = data_symbols[i];
    for (Eigen::Index i = 0; i < grid.pilot_bins.size(); ++i)
        freq[grid.pilot_bins[i]] = pilots[i];

    const ComplexVector body = unitary_ifft(freq);
    ComplexVector out(OfdmGrid::kFftSize + OfdmGrid::kCpLen);
    out.head(OfdmGrid::kCpLen) = body.tail(OfdmGrid::kCpLen);
    out.tail(OfdmGrid::kFftSize) = body;
    return out;
}

std::pair<ComplexVector, ComplexVector> disassemble(const Eigen::Ref<const ComplexVector>& rx,
                                                    const OfdmGrid& grid) {
    if (rx.size() != OfdmGrid::kFftSize + OfdmGrid::kCpLen)
        throw std::invalid_argument("expected 80 time samples");
    const ComplexVector freq = unitary_fft(rx.tail(OfdmGrid::kFftSize));
    ComplexVector data(grid.data_bins.size()), pilots(grid.pilot_bins.size());
    for (Eigen::Index i = 0; i < grid.data_bins.size(); ++i) data[i] = freq[grid.data_bins[i]];
    for (Eigen::Index i = 0; i < grid.pilot_bins.size(); ++i) pilots[i] = freq[grid.pilot_bins[i]];
    return {std::move(data), std::move(pilots)};
}

}  // namespace rispnc::ofdm
