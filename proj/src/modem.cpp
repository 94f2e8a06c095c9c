#include "rispnc/modem.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace rispnc::modem {

namespace {

int int_log2(int x) {
    int n = 0;
    while ((1 << n) < x) ++n;
    return n;
}

int gray_encode(int v) { return v ^ (v >> 1); }

int gray_decode(int v) {
    int out = 0;
    for (; v; v >>= 1) out ^= v;
    return out;
}

// Slice a PAM coordinate, already divided by scale, to a digit index.
// Levels sit at 2d - (q-1); exact midpoints go to the smaller index.
int slice_digit(double u, int q) {
    const double t = (u + (q - 1)) / 2.0;
    double d = std::ceil(t - 0.5);
    if (d < 0.0) d = 0.0;
    if (d > q - 1) d = q - 1;
    return static_cast<int>(d);
}

}  // namespace

Modulation make_modulation(int order, Labeling labeling) {
    Modulation m;
    m.order = order;
    m.labeling = labeling;
    switch (order) {
        case 2:
            m.digits_per_dim = 2;
            m.dims = 1;
            m.bits_per_symbol = 1;
            m.scale = 1.0;  // points are -1, +1
            break;
        case 4:
        case 16:
        case 64:
            m.digits_per_dim = static_cast<int>(std::lround(std::sqrt(double(order))));
            m.dims = 2;
            m.bits_per_symbol = int_log2(order);
            // Mean square of the unnormalized grid is 2(M-1)/3.
            m.scale = std::sqrt(3.0 / (2.0 * (order - 1)));
            break;
        default:
            throw std::invalid_argument("modulation order " + std::to_string(order) +
                                        " not supported; valid set is {2, 4, 16, 64}");
    }
    return m;
}

int digit_label(int digit, const Modulation& m) {
    return m.labeling == Labeling::Gray ? gray_encode(digit) : digit;
}

int label_to_digit(int label, const Modulation& m) {
    return m.labeling == Labeling::Gray ? gray_decode(label) : label;
}

std::vector<DigitPair> bits_to_digits(const std::vector<int>& bits, const Modulation& m) {
    if (bits.size() % static_cast<std::size_t>(m.bits_per_symbol) != 0)
        throw std::invalid_argument("bit count " + std::to_string(bits.size()) +
                                    " is not a multiple of bits_per_symbol " +
                                    std::to_string(m.bits_per_symbol));
    const int bits_per_dim = m.bits_per_symbol / m.dims;
    std::vector<DigitPair> out;
    out.reserve(bits.size() / m.bits_per_symbol);
    for (std::size_t i = 0; i < bits.size(); i += m.bits_per_symbol) {
        int p_i = 0;
        for (int k = 0; k < bits_per_dim; ++k) p_i = (p_i << 1) | (bits[i + k] & 1);
        DigitPair d;
        d.d_i = label_to_digit(p_i, m);
        if (m.dims == 2) {
            int p_q = 0;
            for (int k = 0; k < bits_per_dim; ++k)
                p_q = (p_q << 1) | (bits[i + bits_per_dim + k] & 1);
            d.d_q = label_to_digit(p_q, m);
        }
        out.push_back(d);
    }
    return out;
}

std::vector<int> digits_to_bits(const std::vector<DigitPair>& digits, const Modulation& m) {
    const int bits_per_dim = m.bits_per_symbol / m.dims;
    std::vector<int> out;
    out.reserve(digits.size() * m.bits_per_symbol);
    for (const auto& d : digits) {
        const int p_i = digit_label(d.d_i, m);
        for (int k = bits_per_dim - 1; k >= 0; --k) out.push_back((p_i >> k) & 1);
        if (m.dims == 2) {
            const int p_q = digit_label(d.d_q, m);
            for (int k = bits_per_dim - 1; k >= 0; --k) out.push_back((p_q >> k) & 1);
        }
    }
    return out;
}

Complex digits_to_symbol(const DigitPair& d, const Modulation& m) {
    const int q = m.digits_per_dim;
    if (d.d_i < 0 || d.d_i >= q || (m.dims == 2 && (d.d_q < 0 || d.d_q >= q)))
        throw std::domain_error("digit index out of range for q=" + std::to_string(q));
    if (m.dims == 1) return Complex(2.0 * d.d_i - 1.0, 0.0);
    return Complex((2.0 * d.d_i - (q - 1)) * m.scale, (2.0 * d.d_q - (q - 1)) * m.scale);
}

DigitPair detect_symbol(Complex y, const Modulation& m) {
    const int q = m.digits_per_dim;
    DigitPair d;
    d.d_i = slice_digit(y.real() / m.scale, q);
    d.d_q = m.dims == 2 ? slice_digit(y.imag() / m.scale, q) : 0;
    return d;
}

}  // namespace rispnc::modem
