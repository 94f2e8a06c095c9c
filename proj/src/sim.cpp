#include "rispnc/sim.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <exception>
#include <initializer_list>
#include <limits>
#include <stdexcept>
#include <thread>
#include <utility>

#include "rispnc/ofdm.hpp"
#include "rispnc/power.hpp"

namespace rispnc::sim {

double noise_power(double bandwidth_hz, double noise_figure_db) {
    if (!(bandwidth_hz > 0.0)) throw std::domain_error("bandwidth must be positive");
    return dbm_to_watts(-174.0 + 10.0 * std::log10(bandwidth_hz) + noise_figure_db);
}

namespace {

constexpr std::int64_t kChunkRounds = 512;

int label_diff_bits(int a, int b, const modem::Modulation& m) {
    return std::popcount(static_cast<unsigned>(modem::digit_label(a, m) ^ modem::digit_label(b, m)));
}

int pair_diff_bits(int a_i, int a_q, int b_i, int b_q, const modem::Modulation& m) {
    int n = label_diff_bits(a_i, b_i, m);
    if (m.dims == 2) n += label_diff_bits(a_q, b_q, m);
    return n;
}

std::vector<modem::DigitPair> draw_payload(const modem::Modulation& m, int symbols,
                                           RngStream& rng) {
    std::vector<int> bits(static_cast<std::size_t>(symbols) * m.bits_per_symbol);
    for (auto& b : bits) b = rng.bit() ? 1 : 0;
    return modem::bits_to_digits(bits, m);
}

ComplexVector symbols_of(const std::vector<modem::DigitPair>& digits,
                         const modem::Modulation& m) {
    ComplexVector syms(static_cast<Eigen::Index>(digits.size()));
    for (Eigen::Index k = 0; k < syms.size(); ++k)
        syms[k] = modem::digits_to_symbol(digits[static_cast<std::size_t>(k)], m);
    return syms;
}

using Branch = std::pair<Complex, const ComplexVector*>;  // (sqrt(P) * alpha, symbols)

// Superpose the branches through the flat effective channel, add per-bin (or
// per-sample) AWGN, and return the 48 data-bin observations. The flat
// waveform is the per-subcarrier equivalent: same per-bin model, no framing.
ComplexVector received_bins(std::initializer_list<Branch> branches, double bin_noise_var,
                            Waveform waveform, RngStream& noise_rng) {
    const ofdm::OfdmGrid& grid = ofdm::grid_80211();
    if (waveform == Waveform::Ofdm) {
        static const ComplexVector pilots = ofdm::default_pilots();
        ComplexVector y = ComplexVector::Zero(ofdm::OfdmGrid::kFftSize + ofdm::OfdmGrid::kCpLen);
        for (const auto& [gain, syms] : branches)
            y += gain * ofdm::assemble(*syms, pilots, grid);
        for (Eigen::Index i = 0; i < y.size(); ++i)
            y[i] += noise_rng.complex_gaussian(bin_noise_var);
        return ofdm::disassemble(y, grid).first;
    }
    ComplexVector y(ofdm::OfdmGrid::kDataCount);
    for (Eigen::Index k = 0; k < y.size(); ++k) {
        Complex v{0.0, 0.0};
        for (const auto& [gain, syms] : branches) v += gain * (*syms)[k];
        y[k] = v + noise_rng.complex_gaussian(bin_noise_var);
    }
    return y;
}

}  // namespace

void validate(const Scenario& sc) {
    modem::make_modulation(sc.order, sc.labeling);  // rejects bad orders
    if (sc.elements < 1) throw std::invalid_argument("elements must be >= 1");
    if (!(sc.bandwidth_hz > 0.0)) throw std::invalid_argument("bandwidth_hz must be positive");
    if (std::isnan(sc.noise_figure_db))
        throw std::invalid_argument("noise_figure_db must not be NaN");
    if (!std::isfinite(sc.p_max_dbm)) throw std::invalid_argument("p_max_dbm must be finite");
    if (sc.metric == Metric::EndToEnd && !std::isfinite(sc.p_relay_dbm))
        throw std::invalid_argument("p_relay_dbm must be finite");
    if (sc.single_user && sc.metric == Metric::EndToEnd)
        throw std::invalid_argument("single_user supports the uplink metric only");
    if (sc.cee_enabled && std::isnan(sc.cee.value_db))
        throw std::invalid_argument("cee_db must not be NaN");
    if (sc.max_rounds < 1) throw std::invalid_argument("rounds must be >= 1");
    if (sc.min_errors < 0) throw std::invalid_argument("min_errors must be >= 0");
    if (sc.min_bits < 0) throw std::invalid_argument("min_bits must be >= 0");
}

std::int64_t bits_per_round(const Scenario& sc) {
    const auto m = modem::make_modulation(sc.order, sc.labeling);
    const std::int64_t uplink = std::int64_t{ofdm::OfdmGrid::kDataCount} * m.bits_per_symbol;
    return sc.metric == Metric::EndToEnd ? 2 * uplink : uplink;
}

MaRoundOutput run_ma_round(const Scenario& sc, RngStream& model_rng, RngStream& noise_rng) {
    const modem::Modulation m = modem::make_modulation(sc.order, sc.labeling);
    MaRoundOutput out;
    out.realization = channel::sample_realization(sc.geometry, sc.elements, model_rng, sc.fading);
    if (sc.cee_enabled) out.realization = channel::apply_cee(out.realization, sc.cee, model_rng);

    if (sc.phase_mode == PhaseMode::Optimal) {
        out.cfg_a = ris::optimal_phases(out.realization.a.h_est, out.realization.a.g_est);
        out.cfg_b = ris::optimal_phases(out.realization.b.h_est, out.realization.b.g_est);
    } else {
        out.cfg_a = ris::random_phases(sc.elements, model_rng);
        out.cfg_b = ris::random_phases(sc.elements, model_rng);
    }
    out.alpha_a = ris::effective_gain(out.realization.a.h, out.realization.a.g, out.cfg_a);
    out.alpha_b = ris::effective_gain(out.realization.b.h, out.realization.b.g, out.cfg_b);
    out.alpha_a_est = ris::effective_gain(out.realization.a.h_est, out.realization.a.g_est, out.cfg_a);
    out.alpha_b_est = ris::effective_gain(out.realization.b.h_est, out.realization.b.g_est, out.cfg_b);

    const double p_max_w = dbm_to_watts(sc.p_max_dbm);
    out.p_a = p_max_w;
    out.p_b = sc.single_user ? 0.0 : p_max_w;
    if (!sc.single_user && sc.power_control) {
        try {
            const power::PowerAllocation alloc = power::allocate(out.alpha_a, out.alpha_b, p_max_w);
            out.p_a = alloc.p_a;
            out.p_b = alloc.p_b;
        } catch (const power::AllocationError&) {
            out.dropped = true;
            return out;
        }
    }
    if (sc.single_user && std::abs(out.alpha_a_est) == 0.0) {
        out.dropped = true;
        return out;
    }

    constexpr int n_data = ofdm::OfdmGrid::kDataCount;
    out.digits_a = draw_payload(m, n_data, model_rng);
    if (!sc.single_user) out.digits_b = draw_payload(m, n_data, model_rng);

    const double bin_var = noise_power(sc.bandwidth_hz, sc.noise_figure_db) / ofdm::OfdmGrid::kFftSize;
    const ComplexVector syms_a = symbols_of(out.digits_a, m);
    const Complex gain_a = std::sqrt(out.p_a) * out.alpha_a;

    ComplexVector y;
    if (sc.single_user) {
        y = received_bins({{gain_a, &syms_a}}, bin_var, sc.waveform, noise_rng);
    } else {
        const ComplexVector syms_b = symbols_of(out.digits_b, m);
        const Complex gain_b = std::sqrt(out.p_b) * out.alpha_b;
        y = received_bins({{gain_a, &syms_a}, {gain_b, &syms_b}}, bin_var, sc.waveform, noise_rng);
    }

    out.z_hat.resize(n_data);
    if (sc.single_user) {
        const Complex eq = std::sqrt(out.p_a) * out.alpha_a_est;
        for (int k = 0; k < n_data; ++k) {
            const modem::DigitPair d = modem::detect_symbol(y[k] / eq, m);
            out.z_hat[static_cast<std::size_t>(k)] = {d.d_i, d.d_q};
            const modem::DigitPair& truth = out.digits_a[static_cast<std::size_t>(k)];
            out.bit_errors += pair_diff_bits(d.d_i, d.d_q, truth.d_i, truth.d_q, m);
        }
    } else {
        // Under power control both branches arrive at the same amplitude;
        // without it the slicer falls back to the mean of the two.
        const double amp_a = std::sqrt(out.p_a) * std::abs(out.alpha_a);
        const double amp_b = std::sqrt(out.p_b) * std::abs(out.alpha_b);
        const double branch_gain = sc.power_control ? amp_a : 0.5 * (amp_a + amp_b);
        if (!(branch_gain > 0.0)) {
            out.dropped = true;
            return out;
        }
        for (int k = 0; k < n_data; ++k) {
            const pnc::NetworkCodedDigit z = pnc::relay_detect(y[k], branch_gain, m);
            out.z_hat[static_cast<std::size_t>(k)] = z;
            const pnc::NetworkCodedDigit truth =
                pnc::map_digits(out.digits_a[static_cast<std::size_t>(k)],
                                out.digits_b[static_cast<std::size_t>(k)], m);
            out.bit_errors += pair_diff_bits(z.z_i, z.z_q, truth.z_i, truth.z_q, m);
        }
    }
    out.bits = std::int64_t{n_data} * m.bits_per_symbol;
    return out;
}

BcRoundOutput run_bc_round(const Scenario& sc, const MaRoundOutput& ma, RngStream& noise_rng) {
    const modem::Modulation m = modem::make_modulation(sc.order, sc.labeling);
    const int n_data = static_cast<int>(ma.z_hat.size());

    std::vector<modem::DigitPair> z_digits(ma.z_hat.size());
    for (std::size_t k = 0; k < z_digits.size(); ++k)
        z_digits[k] = {ma.z_hat[k].z_i, ma.z_hat[k].z_q};
    const ComplexVector syms_r = symbols_of(z_digits, m);

    const double sqrt_pr = std::sqrt(dbm_to_watts(sc.p_relay_dbm));
    const double bin_var = noise_power(sc.bandwidth_hz, sc.noise_figure_db) / ofdm::OfdmGrid::kFftSize;
    const ComplexVector y_a =
        received_bins({{sqrt_pr * ma.alpha_a, &syms_r}}, bin_var, sc.waveform, noise_rng);
    const ComplexVector y_b =
        received_bins({{sqrt_pr * ma.alpha_b, &syms_r}}, bin_var, sc.waveform, noise_rng);

    BcRoundOutput out;
    const auto recover_side = [&](const ComplexVector& y, Complex eq,
                                  const std::vector<modem::DigitPair>& own,
                                  const std::vector<modem::DigitPair>& peer) {
        for (int k = 0; k < n_data; ++k) {
            const modem::DigitPair d = modem::detect_symbol(y[k] / eq, m);
            const pnc::NetworkCodedDigit z{d.d_i, d.d_q};
            const modem::DigitPair rec = pnc::recover_peer(z, own[static_cast<std::size_t>(k)], m);
            const modem::DigitPair& truth = peer[static_cast<std::size_t>(k)];
            out.bit_errors += pair_diff_bits(rec.d_i, rec.d_q, truth.d_i, truth.d_q, m);
        }
    };
    recover_side(y_a, sqrt_pr * ma.alpha_a_est, ma.digits_a, ma.digits_b);
    recover_side(y_b, sqrt_pr * ma.alpha_b_est, ma.digits_b, ma.digits_a);
    out.bits = 2 * std::int64_t{n_data} * m.bits_per_symbol;
    return out;
}

RoundResult run_round(const Scenario& sc, RngStream& model_rng, RngStream& noise_rng) {
    const MaRoundOutput ma = run_ma_round(sc, model_rng, noise_rng);
    if (ma.dropped) return {0, 0, true};
    if (sc.metric == Metric::Uplink) return {ma.bit_errors, ma.bits, false};
    if (std::abs(ma.alpha_a_est) == 0.0 || std::abs(ma.alpha_b_est) == 0.0) return {0, 0, true};
    const BcRoundOutput bc = run_bc_round(sc, ma, noise_rng);
    return {bc.bit_errors, bc.bits, false};
}

const char* axis_name(SweepAxis axis) {
    switch (axis) {
        case SweepAxis::PMax: return "p_max_dbm";
        case SweepAxis::Cee: return "cee_db";
        case SweepAxis::Elements: return "elements";
    }
    return "unknown";
}

Scenario with_axis_value(Scenario sc, SweepAxis axis, double value) {
    switch (axis) {
        case SweepAxis::PMax:
            sc.p_max_dbm = value;
            break;
        case SweepAxis::Cee:
            sc.cee_enabled = true;
            sc.cee.value_db = value;
            break;
        case SweepAxis::Elements: {
            double ip = 0.0;
            if (std::modf(value, &ip) != 0.0 || ip < 1.0)
                throw std::invalid_argument("elements sweep values must be positive integers");
            sc.elements = static_cast<Eigen::Index>(ip);
            break;
        }
    }
    return sc;
}

std::vector<BerPoint> sweep(const Scenario& base, SweepAxis axis,
                            const std::vector<double>& values, int workers) {
    if (values.empty()) throw std::invalid_argument("sweep needs at least one value");
    if (workers < 1) throw std::invalid_argument("workers must be >= 1");

    std::vector<BerPoint> points;
    points.reserve(values.size());
    for (std::size_t p = 0; p < values.size(); ++p) {
        const Scenario sc = with_axis_value(base, axis, values[p]);
        validate(sc);

        std::int64_t errors = 0, bits = 0, dropped = 0, executed = 0;
        while (executed < sc.max_rounds) {
            const std::int64_t chunk = std::min(kChunkRounds, sc.max_rounds - executed);
            const int nw = static_cast<int>(std::min<std::int64_t>(workers, chunk));

            std::vector<std::array<std::int64_t, 3>> partial(
                static_cast<std::size_t>(nw), {0, 0, 0});
            std::vector<std::exception_ptr> failure(static_cast<std::size_t>(nw));
            const auto work = [&](int w) {
                try {
                    for (std::int64_t r = executed + w; r < executed + chunk; r += nw) {
                        RngStream model = RngStream::derive(
                            sc.master_seed, static_cast<std::uint64_t>(p),
                            static_cast<std::uint64_t>(r), 0);
                        RngStream noise = RngStream::derive(
                            sc.master_seed, static_cast<std::uint64_t>(p),
                            static_cast<std::uint64_t>(r), 1);
                        const RoundResult res = run_round(sc, model, noise);
                        auto& acc = partial[static_cast<std::size_t>(w)];
                        acc[0] += res.bit_errors;
                        acc[1] += res.bits;
                        acc[2] += res.dropped ? 1 : 0;
                    }
                } catch (...) {
                    failure[static_cast<std::size_t>(w)] = std::current_exception();
                }
            };
            if (nw == 1) {
                work(0);
            } else {
                std::vector<std::thread> pool;
                pool.reserve(static_cast<std::size_t>(nw));
                for (int w = 0; w < nw; ++w) pool.emplace_back(work, w);
                for (auto& t : pool) t.join();
            }
            for (const auto& f : failure)
                if (f) std::rethrow_exception(f);
            for (const auto& acc : partial) {
                errors += acc[0];
                bits += acc[1];
                dropped += acc[2];
            }
            executed += chunk;
            if (errors >= sc.min_errors && bits >= sc.min_bits) break;
        }

        BerPoint pt;
        pt.swept_value = values[p];
        pt.bits = bits;
        pt.errors = errors;
        pt.ber = bits > 0 ? static_cast<double>(errors) / static_cast<double>(bits)
                          : std::numeric_limits<double>::quiet_NaN();
        pt.dropped_rounds = dropped;
        pt.rounds = executed;
        points.push_back(pt);
    }
    return points;
}

}  // namespace rispnc::sim
