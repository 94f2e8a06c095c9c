#include "rispnc/rng.hpp"

#include <cmath>

#include "rispnc/types.hpp"

namespace rispnc {

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

RngStream RngStream::derive(std::uint64_t master, std::uint64_t a) {
    return RngStream(mix64(mix64(master) ^ a));
}

RngStream RngStream::derive(std::uint64_t master, std::uint64_t a, std::uint64_t b) {
    return RngStream(mix64(mix64(mix64(master) ^ a) ^ b));
}

RngStream RngStream::derive(std::uint64_t master, std::uint64_t a, std::uint64_t b,
                            std::uint64_t c) {
    return RngStream(mix64(mix64(mix64(mix64(master) ^ a) ^ b) ^ c));
}

double RngStream::uniform() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
}

double RngStream::uniform(double lo, double hi) {
    return lo + uniform() * (hi - lo);
}

double RngStream::gaussian() {
    double u1 = uniform();
    double u2 = uniform();
    if (u1 < 0x1.0p-100) u1 = 0x1.0p-100;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
}

std::complex<double> RngStream::complex_gaussian(double variance) {
    double u1 = uniform();
    double u2 = uniform();
    if (u1 < 0x1.0p-100) u1 = 0x1.0p-100;
    const double r = std::sqrt(-variance * std::log(u1));
    return {r * std::cos(kTwoPi * u2), r * std::sin(kTwoPi * u2)};
}

}  // namespace rispnc
