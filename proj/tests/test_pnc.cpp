#include <doctest.h>

#include <stdexcept>

#include "rispnc/modem.hpp"
#include "rispnc/pnc.hpp"

using namespace rispnc;
using modem::DigitPair;
using pnc::NetworkCodedDigit;

namespace {

// Every digit pair of the order, I and Q dimensions independent.
template <typename F>
void for_all_pairs(const modem::Modulation& m, F&& f) {
    const int q = m.digits_per_dim;
    const int qq = m.dims == 2 ? q : 1;
    for (int ai = 0; ai < q; ++ai)
        for (int aq = 0; aq < qq; ++aq)
            for (int bi = 0; bi < q; ++bi)
                for (int bq = 0; bq < qq; ++bq) f(DigitPair{ai, aq}, DigitPair{bi, bq});
}

}  // namespace

TEST_CASE("recover_peer inverts map_digits for both users, all orders") {
    for (int order : {2, 4, 16, 64}) {
        const auto m = modem::make_modulation(order);
        for_all_pairs(m, [&](DigitPair a, DigitPair b) {
            const auto z = pnc::map_digits(a, b, m);
            CHECK_EQ(pnc::recover_peer(z, a, m), b);
            CHECK_EQ(pnc::recover_peer(z, b, m), a);
        });
    }
}

TEST_CASE("the BPSK map is XOR") {
    const auto m = modem::make_modulation(2);
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            CHECK_EQ(pnc::map_digits({a, 0}, {b, 0}, m).z_i, a ^ b);
}

TEST_CASE("noiseless superposition slices to the ground-truth map") {
    // The aliasing of sums s and s + q onto one network-coded digit is
    // exercised implicitly: every pair with the same z must decode equal.
    for (int order : {2, 4, 16, 64}) {
        const auto m = modem::make_modulation(order);
        for_all_pairs(m, [&](DigitPair a, DigitPair b) {
            const Complex y = modem::digits_to_symbol(a, m) + modem::digits_to_symbol(b, m);
            CHECK_EQ(pnc::relay_detect(y, 1.0, m), pnc::map_digits(a, b, m));
        });
    }
}

TEST_CASE("relay detection scales with the branch gain") {
    const auto m = modem::make_modulation(16);
    const DigitPair a{3, 1}, b{2, 2};
    const Complex y = modem::digits_to_symbol(a, m) + modem::digits_to_symbol(b, m);
    CHECK_EQ(pnc::relay_detect(3.7e-8 * y, 3.7e-8, m), pnc::map_digits(a, b, m));
}

TEST_CASE("sum-grid midpoints break toward the smaller sum") {
    const auto m = modem::make_modulation(4);  // sum levels -2s, 0, +2s
    const double mid = -1.0 * m.scale;         // between sums 0 and 1
    const auto z = pnc::relay_detect(Complex(mid, mid), 1.0, m);
    CHECK_EQ(z, NetworkCodedDigit{0, 0});
}

TEST_CASE("relay detection clamps outliers to the sum-grid edge") {
    const auto m = modem::make_modulation(16);
    // Far positive: sum 2(q-1) = 6, mod q -> 2, both dimensions.
    CHECK_EQ(pnc::relay_detect(Complex(50.0, 50.0), 1.0, m), NetworkCodedDigit{2, 2});
}

TEST_CASE("non-positive branch gain is rejected") {
    const auto m = modem::make_modulation(4);
    CHECK_THROWS_AS(pnc::relay_detect(Complex(0.1, 0.1), 0.0, m), std::domain_error);
    CHECK_THROWS_AS(pnc::relay_detect(Complex(0.1, 0.1), -1.0, m), std::domain_error);
}
