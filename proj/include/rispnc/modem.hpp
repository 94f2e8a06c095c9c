#pragma once
// M-QAM constellation mapping and demapping.
//
// Symbols are described by per-dimension PAM digit indices: digit d in
// [0, q) selects amplitude (2d - (q-1)) * scale, with q = sqrt(M) for square
// QAM and q = 2 (single dimension) for BPSK. The scale factor normalizes the
// constellation to unit average symbol energy. Digit indices are always the
// amplitude ranks; the labeling only controls which bit pattern names each
// digit (natural binary by default, Gray as an option).

#include <vector>

#include "rispnc/types.hpp"

namespace rispnc::modem {

enum class Labeling { Natural, Gray };

struct Modulation {
    int order = 4;            // M, one of {2, 4, 16, 64}
    int digits_per_dim = 2;   // q
    int bits_per_symbol = 2;  // log2(M)
    int dims = 2;             // 2 for QAM, 1 for BPSK
    double scale = 1.0;       // unit-energy normalizer
    Labeling labeling = Labeling::Natural;
};

// Throws std::invalid_argument unless order is one of {2, 4, 16, 64}.
Modulation make_modulation(int order, Labeling labeling = Labeling::Natural);

struct DigitPair {
    int d_i = 0;
    int d_q = 0;  // unused for BPSK
    friend bool operator==(const DigitPair&, const DigitPair&) = default;
};

// Groups of log2(M) bits, MSB first, I digit before Q digit.
// Throws std::invalid_argument when bits.size() is not a multiple of
// bits_per_symbol.
std::vector<DigitPair> bits_to_digits(const std::vector<int>& bits, const Modulation& m);
std::vector<int> digits_to_bits(const std::vector<DigitPair>& digits, const Modulation& m);

// Throws std::domain_error on out-of-range digits.
Complex digits_to_symbol(const DigitPair& d, const Modulation& m);

// Nearest constellation point, realized as independent per-dimension slicing
// (equivalent to full search). Exact mid-level inputs break toward the
// smaller digit index.
DigitPair detect_symbol(Complex y, const Modulation& m);

// Bit pattern naming a digit index under the modulation's labeling,
// log2(q) bits wide.
int digit_label(int digit, const Modulation& m);
// Inverse of digit_label.
int label_to_digit(int label, const Modulation& m);

}  // namespace rispnc::modem
