#pragma once
// Deterministic random streams for reproducible Monte Carlo runs.
//
// Every simulation consumer owns an explicit stream; parallel workers derive
// independent streams from the master seed with derive(), a pure function of
// the identifiers. Uniform and Gaussian draws are produced by explicit
// transforms of the raw mt19937_64 output, so a given stream yields the same
// sequence on every platform and standard library.

#include <complex>
#include <cstdint>
#include <random>

namespace rispnc {

// SplitMix64 finalizer, used to hash stream identifiers into seeds.
std::uint64_t mix64(std::uint64_t x);

class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : gen_(seed) {}

    static RngStream derive(std::uint64_t master, std::uint64_t a);
    static RngStream derive(std::uint64_t master, std::uint64_t a, std::uint64_t b);
    static RngStream derive(std::uint64_t master, std::uint64_t a, std::uint64_t b,
                            std::uint64_t c);

    std::uint64_t next_u64() { return gen_(); }
    bool bit() { return (gen_() >> 63) != 0; }

    // Uniform on [0, 1), 53-bit resolution.
    double uniform();
    // Uniform on [lo, hi).
    double uniform(double lo, double hi);
    // Standard normal via Box-Muller.
    double gaussian();
    // Circularly symmetric complex Gaussian with E|z|^2 = variance.
    std::complex<double> complex_gaussian(double variance);

private:
    std::mt19937_64 gen_;
};

}  // namespace rispnc
