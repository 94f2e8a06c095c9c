// End-to-end acceptance checks for the simulator. Each criterion prints one
// PASS/FAIL line (details indented below it); the exit status is the number
// of failed criteria. Every check is deterministic: fixed seeds, fixed
// budgets, worker count only affects wall time.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "rispnc/cli.hpp"
#include "rispnc/config.hpp"
#include "rispnc/ofdm.hpp"
#include "rispnc/sim.hpp"

using namespace rispnc;
using sim::Scenario;

namespace {

int g_failures = 0;

void verdict(int criterion, bool ok, const std::string& what) {
    std::printf("criterion %d: %s  %s\n", criterion, ok ? "PASS" : "FAIL", what.c_str());
    if (!ok) ++g_failures;
}

std::string fmt(const char* f, ...) {
    char buf[512];
    va_list args;
    va_start(args, f);
    std::vsnprintf(buf, sizeof buf, f, args);
    va_end(args);
    return buf;
}

int workers() {
    const unsigned hw = std::thread::hardware_concurrency();
    return static_cast<int>(std::clamp(hw, 1u, 8u));
}

sim::BerPoint run_point(const Scenario& sc, sim::SweepAxis axis, double value) {
    return sim::sweep(sc, axis, {value}, workers())[0];
}

// ---- criterion 1: exhaustive network-coding algebra ------------------------

bool pnc_algebra_exhaustive(std::string& note) {
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    for (int order : {2, 4, 16, 64}) {
        const auto m = modem::make_modulation(order);
        const int q = m.digits_per_dim;
        const int qq = m.dims == 2 ? q : 1;
        for (int ai = 0; ai < q && ok; ++ai)
            for (int aq = 0; aq < qq && ok; ++aq)
                for (int bi = 0; bi < q && ok; ++bi)
                    for (int bq = 0; bq < qq && ok; ++bq) {
                        const modem::DigitPair a{ai, aq}, b{bi, bq};
                        const auto z = pnc::map_digits(a, b, m);
                        const Complex y =
                            modem::digits_to_symbol(a, m) + modem::digits_to_symbol(b, m);
                        ok = pnc::relay_detect(y, 1.0, m) == z &&
                             pnc::recover_peer(z, a, m) == b && pnc::recover_peer(z, b, m) == a;
                        if (order == 2) ok = ok && z.z_i == (ai ^ bi);
                    }
        if (!ok) {
            note = fmt("mismatch at order %d", order);
            return false;
        }
    }
    const double ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
    note = fmt("noiseless relay map, peer recovery, and the M=2 XOR table, "
               "all digit pairs of M in {2,4,16,64} (%.0f ms)",
               ms);
    return ms < 1000.0;
}

// ---- criterion 2: array-gain law -------------------------------------------

// Scan upward in transmit power until the BER crosses the target, then
// interpolate log-linearly between the bracketing points.
double required_power(const Scenario& base, double target, double start, double step,
                      int max_steps) {
    double prev_p = std::numeric_limits<double>::quiet_NaN();
    double prev_ber = std::numeric_limits<double>::quiet_NaN();
    for (int i = 0; i <= max_steps; ++i) {
        const double p = start + i * step;
        const auto pt = run_point(base, sim::SweepAxis::PMax, p);
        const double ber =
            pt.errors > 0 ? pt.ber : 0.5 / static_cast<double>(std::max<std::int64_t>(pt.bits, 1));
        if (ber < target) {
            if (i == 0) return std::numeric_limits<double>::quiet_NaN();
            return prev_p + step * (std::log10(prev_ber) - std::log10(target)) /
                                (std::log10(prev_ber) - std::log10(ber));
        }
        prev_p = p;
        prev_ber = ber;
    }
    return std::numeric_limits<double>::quiet_NaN();
}

bool array_gain_law(std::string& note) {
    Scenario base;
    base.order = 16;
    base.max_rounds = 8192;
    base.min_errors = 150;

    const struct {
        Eigen::Index elements;
        double start;
    } curves[] = {{16, 26.0}, {64, 13.0}, {256, 1.0}};
    double req[3] = {};
    for (int i = 0; i < 3; ++i) {
        Scenario sc = base;
        sc.elements = curves[i].elements;
        sc.master_seed = 1000 + static_cast<std::uint64_t>(curves[i].elements);
        req[i] = required_power(sc, 1e-3, curves[i].start, 2.0, 12);
        if (!std::isfinite(req[i])) {
            note = fmt("no bracket found for L=%d", static_cast<int>(curves[i].elements));
            return false;
        }
    }
    const double gap1 = req[0] - req[1];
    const double gap2 = req[1] - req[2];
    note = fmt("16-QAM P required for BER 1e-3: L=16 %.1f, L=64 %.1f, L=256 %.1f dBm; "
               "4x-element gaps %.1f and %.1f dB (bound 12 +- 2)",
               req[0], req[1], req[2], gap1, gap2);
    return std::abs(gap1 - 12.0) <= 2.0 && std::abs(gap2 - 12.0) <= 2.0;
}

// ---- criterion 3: random-phase collapse -------------------------------------

bool random_phase_collapse(std::string& note) {
    bool ok = true;
    double lo = 1.0, hi = 0.0;
    for (int order : {4, 16}) {
        Scenario sc;
        sc.order = order;
        sc.elements = 16;
        sc.phase_mode = sim::PhaseMode::Random;
        sc.max_rounds = 4096;
        sc.min_errors = 100;
        sc.min_bits = 100000;
        sc.master_seed = 2000 + static_cast<std::uint64_t>(order);
        const auto pts = sim::sweep(sc, sim::SweepAxis::PMax, {0.0, 25.0, 50.0}, workers());
        for (const auto& pt : pts) {
            ok = ok && pt.bits >= 100000 && pt.ber >= 0.40 && pt.ber <= 0.60;
            lo = std::min(lo, pt.ber);
            hi = std::max(hi, pt.ber);
        }
    }
    note = fmt("random phases, L=16, M in {4,16}, P in {0,25,50} dBm: "
               "BER spans [%.3f, %.3f] (bound [0.40, 0.60], >= 1e5 bits/point)",
               lo, hi);
    return ok;
}

// ---- criterion 4: estimation-error plateau and cliff ------------------------

bool cee_plateau_cliff(std::string& note) {
    // The fig5 recipe powers are the calibration: each curve starts near
    // BER 1e-4 at the -110 dB level under the default (relative) reading.
    const struct {
        int order;
        Eigen::Index elements;
        double p_dbm;
    } curves[] = {{4, 64, 15.0}, {4, 256, 2.5}, {16, 64, 22.0}, {16, 256, 9.5}};

    bool ok = true;
    std::vector<std::string> lines;
    for (const auto& c : curves) {
        Scenario sc;
        sc.order = c.order;
        sc.elements = c.elements;
        sc.p_max_dbm = c.p_dbm;
        sc.max_rounds = 32768;
        sc.min_errors = 150;
        sc.master_seed = 4000 + static_cast<std::uint64_t>(c.order) * 10 +
                         static_cast<std::uint64_t>(c.elements);
        const auto pts =
            sim::sweep(sc, sim::SweepAxis::Cee, {-110.0, -60.0, -10.0}, workers());
        const double plateau = pts[0].ber;
        const double at60 = pts[1].ber;
        const double at10 = pts[2].ber;
        const bool calibrated = plateau >= 0.3e-4 && plateau <= 3e-4;
        const bool flat = at60 <= 3.0 * plateau;
        const bool cliff = at10 >= 10.0 * plateau;
        ok = ok && calibrated && flat && cliff;
        lines.push_back(fmt("%d-QAM L=%-3d @ %4.1f dBm: BER(-110)=%.2e%s, "
                            "BER(-60)=%.2fx plateau (<= 3), BER(-10)=%.0fx (>= 10)%s",
                            c.order, static_cast<int>(c.elements), c.p_dbm, plateau,
                            calibrated ? "" : " [off 1e-4]", at60 / plateau,
                            at10 / plateau, flat && cliff ? "" : " [violated]"));
    }
    note = "calibrated curves stay flat to -60 dB and collapse by -10 dB";
    for (const auto& l : lines) note += "\n    " + l;
    return ok;
}

// ---- criterion 5: single-user AWGN oracle ------------------------------------

// Closed-form BER of Gray-labeled square M-QAM (per-dimension PAM slicing)
// in complex AWGN at symbol SNR, independent of the modem implementation.
double qam_awgn_ber(int order, double snr) {
    const int q = order == 2 ? 2 : static_cast<int>(std::lround(std::sqrt(double(order))));
    const int bits_per_dim = std::bit_width(static_cast<unsigned>(q)) - 1;
    const double scale = order == 2 ? 1.0 : std::sqrt(3.0 / (2.0 * (order - 1)));
    const double sigma = std::sqrt(1.0 / (2.0 * snr));
    const double inf = std::numeric_limits<double>::infinity();
    const auto qfun = [](double x) { return 0.5 * std::erfc(x / std::sqrt(2.0)); };
    const auto gray = [](int d) { return d ^ (d >> 1); };

    double err_bits = 0.0;
    for (int d = 0; d < q; ++d) {
        const double x = (2 * d - (q - 1)) * scale;
        for (int dp = 0; dp < q; ++dp) {
            if (dp == d) continue;
            const double lo = dp == 0 ? -inf : (2 * dp - 1 - (q - 1)) * scale;
            const double hi = dp == q - 1 ? inf : (2 * dp + 1 - (q - 1)) * scale;
            const double p = qfun((lo - x) / sigma) - qfun((hi - x) / sigma);
            err_bits += p * std::popcount(static_cast<unsigned>(gray(d) ^ gray(dp)));
        }
    }
    return err_bits / (q * bits_per_dim);
}

double snr_for_ber(int order, double target) {
    double lo = 0.1, hi = 1.0e5;
    for (int i = 0; i < 200; ++i) {
        const double mid = std::sqrt(lo * hi);
        (qam_awgn_ber(order, mid) > target ? lo : hi) = mid;
    }
    return std::sqrt(lo * hi);
}

bool single_user_oracle(std::string& note) {
    bool ok = true;
    std::string parts;
    for (int order : {4, 16}) {
        Scenario sc;
        sc.single_user = true;
        sc.fading = channel::Fading::Unit;
        sc.labeling = modem::Labeling::Gray;
        sc.order = order;
        sc.elements = 4;
        sc.max_rounds = 65536;
        sc.min_errors = 800;
        sc.master_seed = 5000 + static_cast<std::uint64_t>(order);

        // Deterministic link under unit fading: alpha = L * sqrt(pl_h pl_g).
        RngStream probe(1);
        const auto real = channel::sample_realization(sc.geometry, sc.elements, probe,
                                                      channel::Fading::Unit);
        const double alpha =
            static_cast<double>(sc.elements) * std::sqrt(real.a.pl_h * real.a.pl_g);
        const double bin_var =
            sim::noise_power(sc.bandwidth_hz, sc.noise_figure_db) / ofdm::OfdmGrid::kFftSize;

        const double target = 1e-3;
        const double snr = snr_for_ber(order, target);
        sc.p_max_dbm = watts_to_dbm(snr * bin_var / (alpha * alpha));

        const auto pt = run_point(sc, sim::SweepAxis::PMax, sc.p_max_dbm);
        const double oracle = qam_awgn_ber(order, snr);
        const double rel = std::abs(pt.ber - oracle) / oracle;
        ok = ok && rel <= 0.10;
        parts += fmt("%s%d-QAM @ %.2f dBm: measured %.3e vs closed form %.3e (%.1f%%)",
                     parts.empty() ? "" : "; ", order, sc.p_max_dbm, pt.ber, oracle,
                     100.0 * rel);
    }
    note = "Gray-coded AWGN reference within 10% at BER 1e-3: " + parts;
    return ok;
}

// ---- criterion 6: equal-arrival identity ------------------------------------

bool equal_arrival(std::string& note) {
    Scenario sc;
    sc.elements = 16;
    sc.order = 4;
    const double p_max_w = dbm_to_watts(sc.p_max_dbm);
    double worst = 0.0;
    bool cap_ok = true;
    const int trials = 10000;
    for (int r = 0; r < trials; ++r) {
        RngStream model = RngStream::derive(6001, static_cast<std::uint64_t>(r), 0);
        RngStream noise = RngStream::derive(6001, static_cast<std::uint64_t>(r), 1);
        const auto out = sim::run_ma_round(sc, model, noise);
        if (out.dropped) {
            cap_ok = false;
            break;
        }
        const double arr_a = std::sqrt(out.p_a) * std::abs(out.alpha_a);
        const double arr_b = std::sqrt(out.p_b) * std::abs(out.alpha_b);
        worst = std::max(worst, std::abs(arr_a - arr_b) / std::max(arr_a, arr_b));
        cap_ok = cap_ok && std::max(out.p_a, out.p_b) == p_max_w;
        if (!cap_ok) break;
    }
    note = fmt("sqrt(P)|alpha| equal across %d realizations, worst relative gap %.2e "
               "(bound 1e-12); stronger branch always at P_max: %s",
               trials, worst, cap_ok ? "yes" : "no");
    return worst < 1e-12 && cap_ok;
}

// ---- criterion 7: perfect-CSI realness ---------------------------------------

bool alpha_realness(std::string& note) {
    const channel::NodeGeometry geom;
    double worst = 0.0;
    for (const Eigen::Index elements : {1, 4, 16, 64, 256}) {
        RngStream rng = RngStream::derive(7001, static_cast<std::uint64_t>(elements));
        for (int r = 0; r < 10000; ++r) {
            const auto real = channel::sample_realization(geom, elements, rng);
            const auto cfg = ris::optimal_phases(real.a.h_est, real.a.g_est);
            const Complex alpha = ris::effective_gain(real.a.h, real.a.g, cfg);
            worst = std::max(worst, std::abs(alpha.imag()) / std::abs(alpha));
        }
    }
    note = fmt("optimal phases on exact estimates: worst Im(alpha)/|alpha| = %.2e over "
               "1e4 realizations x L in {1,4,16,64,256} (bound 1e-9)",
               worst);
    return worst < 1e-9;
}

// ---- criterion 8: OFDM layer --------------------------------------------------

bool ofdm_layer(std::string& note) {
    // Exact reconstruction through assemble/disassemble.
    RngStream rng(8001);
    const auto m = modem::make_modulation(16);
    ComplexVector data(48);
    for (Eigen::Index k = 0; k < 48; ++k) {
        const int di = static_cast<int>(rng.next_u64() % 4);
        const int dq = static_cast<int>(rng.next_u64() % 4);
        data[k] = modem::digits_to_symbol({di, dq}, m);
    }
    const auto& grid = ofdm::grid_80211();
    const ComplexVector tx = ofdm::assemble(data, ofdm::default_pilots(), grid);
    const auto [rx, pil] = ofdm::disassemble(tx, grid);
    const double worst = (rx - data).cwiseAbs().maxCoeff();
    if (worst > 1e-12) {
        note = fmt("round-trip error %.2e exceeds 1e-12", worst);
        return false;
    }

    // Framed vs flat per-subcarrier waveform at matched seeds.
    Scenario sc;
    sc.elements = 16;
    sc.order = 16;
    sc.p_max_dbm = 32.0;
    sc.max_rounds = 1024;
    sc.min_errors = 1 << 30;
    sc.master_seed = 8002;
    const auto framed = run_point(sc, sim::SweepAxis::PMax, sc.p_max_dbm);
    sc.waveform = sim::Waveform::Flat;
    const auto flat = run_point(sc, sim::SweepAxis::PMax, sc.p_max_dbm);
    const double diff = static_cast<double>(framed.errors - flat.errors);
    const double sigma = std::sqrt(static_cast<double>(framed.errors + flat.errors));
    note = fmt("round-trip max error %.1e (<= 1e-12); OFDM vs flat on the same channels: "
               "%lld vs %lld errors on %lld bits, gap %.1f sigma (<= 2)",
               worst, static_cast<long long>(framed.errors),
               static_cast<long long>(flat.errors), static_cast<long long>(framed.bits),
               std::abs(diff) / sigma);
    return framed.bits == flat.bits && std::abs(diff) <= 2.0 * sigma;
}

// ---- criterion 9: byte-identical reruns ----------------------------------------

std::string slurp(const std::filesystem::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

bool deterministic_rerun(std::string& note) {
    namespace fs = std::filesystem;
    const fs::path base = fs::temp_directory_path() / "rispnc_acceptance";
    fs::remove_all(base);

    config::RunPlan plan = config::recipe("fig4");
    std::vector<std::string> first;
    for (int run = 0; run < 3; ++run) {
        plan.out_dir = (base / ("run" + std::to_string(run))).string();
        plan.workers = run == 2 ? 4 : 1;  // last run exercises the threaded path
        std::ostringstream out, err;
        if (cli::run(plan, "fig4", out, err) != 0) {
            note = "cli run failed: " + err.str();
            return false;
        }
        std::vector<std::string> bytes;
        for (const auto& job : plan.jobs)
            bytes.push_back(slurp(fs::path(plan.out_dir) / (job.name + ".csv")));
        if (run == 0) {
            first = bytes;
        } else if (bytes != first) {
            note = fmt("rerun %d diverged", run);
            fs::remove_all(base);
            return false;
        }
    }
    fs::remove_all(base);
    note = fmt("fig4 recipe, %zu sweeps: CSV bytes identical across two serial reruns "
               "and a 4-worker rerun",
               config::recipe("fig4").jobs.size());
    return true;
}

}  // namespace

int main() {
    std::string note;

    bool ok = pnc_algebra_exhaustive(note);
    verdict(1, ok, note);

    ok = array_gain_law(note);
    verdict(2, ok, note);

    ok = random_phase_collapse(note);
    verdict(3, ok, note);

    ok = cee_plateau_cliff(note);
    verdict(4, ok, note);

    ok = single_user_oracle(note);
    verdict(5, ok, note);

    ok = equal_arrival(note);
    verdict(6, ok, note);

    ok = alpha_realness(note);
    verdict(7, ok, note);

    ok = ofdm_layer(note);
    verdict(8, ok, note);

    ok = deterministic_rerun(note);
    verdict(9, ok, note);

    if (g_failures == 0) std::printf("all 9 criteria passed\n");
    else std::printf("%d criteria failed\n", g_failures);
    return g_failures;
}
