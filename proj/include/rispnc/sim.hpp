#pragma once
// Monte Carlo engine: full PNC rounds over the RIS-assisted two-way relay
// link, and BER sweeps across transmit power, estimation-error level, or RIS
// size.
//
// Power bookkeeping is per subcarrier: a UE transmitting at power P places a
// sqrt(P)-scaled unit-energy symbol on each used bin, so the relay sees
// sqrt(P) * alpha * x[k] per bin. The AWGN share per bin is
// noise_power(bandwidth, nf) / 64, and the time-domain per-sample variance
// equals the per-bin variance under the unitary transform convention, so the
// flat waveform is the exact per-subcarrier equivalent of the OFDM one.
//
// Determinism contract: round r of sweep point p consumes exactly two
// derived streams, derive(master_seed, p, r, 0) for channel + payload and
// derive(master_seed, p, r, 1) for noise. Rounds execute in fixed chunks of
// 512 and the stop rule is evaluated only at chunk boundaries, so sweep
// results are identical for every worker count.

#include <cstdint>
#include <vector>

#include "rispnc/channel.hpp"
#include "rispnc/modem.hpp"
#include "rispnc/pnc.hpp"
#include "rispnc/ris.hpp"
#include "rispnc/rng.hpp"
#include "rispnc/types.hpp"

namespace rispnc::sim {

// Thermal floor -174 dBm/Hz + 10 log10(B) + NF, in watts.
// Throws std::domain_error unless bandwidth_hz > 0. A noise figure of
// -infinity yields zero noise (noiseless reference links).
double noise_power(double bandwidth_hz, double noise_figure_db);

enum class PhaseMode { Optimal, Random };
enum class Metric { Uplink, EndToEnd };
enum class Waveform { Ofdm, Flat };

struct Scenario {
    channel::NodeGeometry geometry{};
    Eigen::Index elements = 1;  // L, per RIS
    int order = 4;              // M
    modem::Labeling labeling = modem::Labeling::Natural;
    PhaseMode phase_mode = PhaseMode::Optimal;
    Metric metric = Metric::Uplink;
    Waveform waveform = Waveform::Ofdm;
    channel::Fading fading = channel::Fading::Rayleigh;
    bool power_control = true;  // off: both UEs at P_max, unequal arrival
    bool single_user = false;   // UE B silenced; relay detects UE A's symbols
                                // directly (AWGN reference mode, uplink only)
    double p_max_dbm = 30.0;
    double p_relay_dbm = 30.0;  // BC phase
    bool cee_enabled = false;
    channel::CeeSpec cee{};
    double bandwidth_hz = 10.0e6;
    double noise_figure_db = 0.0;
    std::uint64_t master_seed = 1;
    // Per-point round budget: run until (errors >= min_errors and
    // bits >= min_bits), else until max_rounds.
    std::int64_t max_rounds = 10000;
    std::int64_t min_errors = 100;
    std::int64_t min_bits = 0;
};

// Throws std::invalid_argument naming the offending field.
void validate(const Scenario& sc);

// Payload bits counted per round: 48 * log2(M), doubled for end-to-end
// (both UEs' recovered streams).
std::int64_t bits_per_round(const Scenario& sc);

struct RoundResult {
    std::int64_t bit_errors = 0;
    std::int64_t bits = 0;
    bool dropped = false;  // degenerate gains, excluded from bit counts
};

// One MA phase: both UEs (or UE A alone in single-user mode) transmit one
// OFDM symbol; the relay detects the network-coded digit per data subcarrier
// and errors are counted against the ground-truth map. Everything the BC
// phase needs (relay decisions, true digits, channel, gains) is returned.
struct MaRoundOutput {
    std::int64_t bit_errors = 0;
    std::int64_t bits = 0;
    bool dropped = false;
    std::vector<pnc::NetworkCodedDigit> z_hat;         // relay decisions
    std::vector<modem::DigitPair> digits_a, digits_b;  // transmitted digits
    channel::ChannelRealization realization;           // reused by BC phase
    ris::RisPhaseConfig cfg_a, cfg_b;
    Complex alpha_a{}, alpha_b{};          // physical effective gains
    Complex alpha_a_est{}, alpha_b_est{};  // control-plane gains (equalizers)
    double p_a = 0.0, p_b = 0.0;           // allocated powers, watts
};

MaRoundOutput run_ma_round(const Scenario& sc, RngStream& model_rng, RngStream& noise_rng);

// One BC phase: the relay re-modulates its detected network-coded digits and
// broadcasts them at P_R over the same (reciprocal) effective gains; each UE
// equalizes with its control-plane gain, detects, recovers the peer digits
// against its own, and errors are counted against the peer's true bits.
// Pre: ma not dropped and both control-plane gains nonzero.
struct BcRoundOutput {
    std::int64_t bit_errors = 0;
    std::int64_t bits = 0;
};

BcRoundOutput run_bc_round(const Scenario& sc, const MaRoundOutput& ma, RngStream& noise_rng);

// Full round under the scenario's metric: uplink counts relay digit errors,
// end-to-end counts both UEs' recovered peer bits.
RoundResult run_round(const Scenario& sc, RngStream& model_rng, RngStream& noise_rng);

enum class SweepAxis { PMax, Cee, Elements };

// Column-stable names: "p_max_dbm", "cee_db", "elements".
const char* axis_name(SweepAxis axis);

// Copy of sc with the swept field replaced. Sweeping Cee enables CEE;
// sweeping Elements requires positive integral values.
Scenario with_axis_value(Scenario sc, SweepAxis axis, double value);

struct BerPoint {
    double swept_value = 0.0;
    std::int64_t bits = 0;
    std::int64_t errors = 0;
    double ber = 0.0;
    std::int64_t dropped_rounds = 0;
    std::int64_t rounds = 0;  // executed, dropped included
};

// One BerPoint per value. Workers only change wall time, never results.
// Throws std::invalid_argument on empty values or workers < 1.
std::vector<BerPoint> sweep(const Scenario& base, SweepAxis axis,
                            const std::vector<double>& values, int workers = 1);

}  // namespace rispnc::sim
