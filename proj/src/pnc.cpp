#include "rispnc/pnc.hpp"

#include <cmath>
#include <stdexcept>

namespace rispnc::pnc {

namespace {

// Nearest sum index on the superposed grid; levels at 2s - 2(q-1) for
// s in [0, 2q-2], midpoint ties toward the smaller s.
int slice_sum(double u, int q) {
    const double t = (u + 2.0 * (q - 1)) / 2.0;
    double s = std::ceil(t - 0.5);
    if (s < 0.0) s = 0.0;
    if (s > 2 * (q - 1)) s = 2 * (q - 1);
    return static_cast<int>(s);
}

int mod_q(int v, int q) {
    const int r = v % q;
    return r < 0 ? r + q : r;
}

}  // namespace

NetworkCodedDigit map_digits(const modem::DigitPair& a, const modem::DigitPair& b,
                             const modem::Modulation& m) {
    const int q = m.digits_per_dim;
    NetworkCodedDigit z;
    z.z_i = mod_q(a.d_i + b.d_i, q);
    z.z_q = m.dims == 2 ? mod_q(a.d_q + b.d_q, q) : 0;
    return z;
}

NetworkCodedDigit relay_detect(Complex y, double branch_gain, const modem::Modulation& m) {
    if (!(branch_gain > 0.0))
        throw std::domain_error("relay_detect requires a positive branch gain");
    const int q = m.digits_per_dim;
    const Complex u = y / branch_gain;
    NetworkCodedDigit z;
    z.z_i = mod_q(slice_sum(u.real() / m.scale, q), q);
    z.z_q = m.dims == 2 ? mod_q(slice_sum(u.imag() / m.scale, q), q) : 0;
    return z;
}

modem::DigitPair recover_peer(const NetworkCodedDigit& z, const modem::DigitPair& own,
                              const modem::Modulation& m) {
    const int q = m.digits_per_dim;
    modem::DigitPair peer;
    peer.d_i = mod_q(z.z_i - own.d_i, q);
    peer.d_q = m.dims == 2 ? mod_q(z.z_q - own.d_q, q) : 0;
    return peer;
}

}  // namespace rispnc::pnc
