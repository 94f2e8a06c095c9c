#include "rispnc/config.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <utility>

namespace rispnc::config {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

[[noreturn]] void fail(int line, const std::string& key, const std::string& what) {
    throw ParseError("line " + std::to_string(line) + ": key '" + key + "': " + what);
}

double to_double(int line, const std::string& key, const std::string& v) {
    char* end = nullptr;
    const double x = std::strtod(v.c_str(), &end);
    if (end != v.c_str() + v.size() || v.empty()) fail(line, key, "expected a number, got '" + v + "'");
    return x;
}

std::int64_t to_int(int line, const std::string& key, const std::string& v) {
    char* end = nullptr;
    const long long x = std::strtoll(v.c_str(), &end, 10);
    if (end != v.c_str() + v.size() || v.empty()) fail(line, key, "expected an integer, got '" + v + "'");
    return x;
}

std::uint64_t to_u64(int line, const std::string& key, const std::string& v) {
    if (v.empty() || v[0] == '-') fail(line, key, "expected an unsigned integer, got '" + v + "'");
    char* end = nullptr;
    const unsigned long long x = std::strtoull(v.c_str(), &end, 10);
    if (end != v.c_str() + v.size()) fail(line, key, "expected an unsigned integer, got '" + v + "'");
    return x;
}

bool to_bool(int line, const std::string& key, const std::string& v) {
    if (v == "on" || v == "true" || v == "1" || v == "yes") return true;
    if (v == "off" || v == "false" || v == "0" || v == "no") return false;
    fail(line, key, "expected on/off, got '" + v + "'");
}

std::vector<std::string> split(const std::string& v, char sep) {
    std::vector<std::string> out;
    std::string tok;
    std::istringstream in(v);
    while (std::getline(in, tok, sep)) out.push_back(trim(tok));
    return out;
}

// Comma-separated numbers; a token may be a lo:step:hi range, expanded with
// integer stepping so the grid is exact.
std::vector<double> to_values(int line, const std::string& key, const std::string& v) {
    std::vector<double> out;
    for (const std::string& tok : split(v, ',')) {
        if (tok.find(':') == std::string::npos) {
            out.push_back(to_double(line, key, tok));
            continue;
        }
        const std::vector<std::string> parts = split(tok, ':');
        if (parts.size() != 3) fail(line, key, "range must be lo:step:hi, got '" + tok + "'");
        const double lo = to_double(line, key, parts[0]);
        const double step = to_double(line, key, parts[1]);
        const double hi = to_double(line, key, parts[2]);
        if (step == 0.0 || (hi - lo) * step < 0.0)
            fail(line, key, "range '" + tok + "' never reaches its end");
        const auto n = static_cast<std::int64_t>(std::floor((hi - lo) / step + 1e-9));
        for (std::int64_t i = 0; i <= n; ++i) out.push_back(lo + static_cast<double>(i) * step);
    }
    if (out.empty()) fail(line, key, "empty value list");
    return out;
}

Eigen::Vector3d to_xyz(int line, const std::string& key, const std::string& v) {
    const std::vector<std::string> parts = split(v, ',');
    if (parts.size() != 3) fail(line, key, "expected x, y, z");
    return {to_double(line, key, parts[0]), to_double(line, key, parts[1]),
            to_double(line, key, parts[2])};
}

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string fmt(const Eigen::Vector3d& p) {
    return fmt(p.x()) + ", " + fmt(p.y()) + ", " + fmt(p.z());
}

void apply_key(RunPlan& plan, SweepJob& job, bool& values_given, int line,
               const std::string& key, const std::string& value) {
    sim::Scenario& sc = job.scenario;
    if (key == "name") {
        if (value.empty() ||
            value.find_first_not_of(
                "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789_-") !=
                std::string::npos)
            fail(line, key, "use letters, digits, '_' or '-'");
        job.name = value;
    } else if (key == "elements") {
        const std::int64_t n = to_int(line, key, value);
        if (n < 1) fail(line, key, "must be >= 1");
        sc.elements = static_cast<Eigen::Index>(n);
    } else if (key == "order") {
        const std::int64_t m = to_int(line, key, value);
        if (m != 2 && m != 4 && m != 16 && m != 64)
            fail(line, key, "expected one of 2, 4, 16, 64");
        sc.order = static_cast<int>(m);
    } else if (key == "labeling") {
        if (value == "natural") sc.labeling = modem::Labeling::Natural;
        else if (value == "gray") sc.labeling = modem::Labeling::Gray;
        else fail(line, key, "expected natural or gray");
    } else if (key == "phase_mode") {
        if (value == "optimal") sc.phase_mode = sim::PhaseMode::Optimal;
        else if (value == "random") sc.phase_mode = sim::PhaseMode::Random;
        else fail(line, key, "expected optimal or random");
    } else if (key == "metric") {
        if (value == "uplink") sc.metric = sim::Metric::Uplink;
        else if (value == "end_to_end") sc.metric = sim::Metric::EndToEnd;
        else fail(line, key, "expected uplink or end_to_end");
    } else if (key == "waveform") {
        if (value == "ofdm") sc.waveform = sim::Waveform::Ofdm;
        else if (value == "flat") sc.waveform = sim::Waveform::Flat;
        else fail(line, key, "expected ofdm or flat");
    } else if (key == "fading") {
        if (value == "rayleigh") sc.fading = channel::Fading::Rayleigh;
        else if (value == "unit") sc.fading = channel::Fading::Unit;
        else fail(line, key, "expected rayleigh or unit");
    } else if (key == "power_control") {
        sc.power_control = to_bool(line, key, value);
    } else if (key == "single_user") {
        sc.single_user = to_bool(line, key, value);
    } else if (key == "p_max_dbm") {
        sc.p_max_dbm = to_double(line, key, value);
    } else if (key == "p_relay_dbm") {
        sc.p_relay_dbm = to_double(line, key, value);
    } else if (key == "cee_db") {
        if (value == "off") {
            sc.cee_enabled = false;
        } else {
            sc.cee_enabled = true;
            sc.cee.value_db = to_double(line, key, value);
        }
    } else if (key == "cee_mode") {
        if (value == "absolute") sc.cee.mode = channel::CeeMode::Absolute;
        else if (value == "relative") sc.cee.mode = channel::CeeMode::Relative;
        else fail(line, key, "expected absolute or relative");
    } else if (key == "bandwidth_hz") {
        const double b = to_double(line, key, value);
        if (!(b > 0.0)) fail(line, key, "must be positive");
        sc.bandwidth_hz = b;
    } else if (key == "noise_figure_db") {
        sc.noise_figure_db = to_double(line, key, value);
    } else if (key == "carrier_hz") {
        sc.geometry.carrier_hz = to_double(line, key, value);
    } else if (key == "ue_a") {
        sc.geometry.ue_a = to_xyz(line, key, value);
    } else if (key == "ue_b") {
        sc.geometry.ue_b = to_xyz(line, key, value);
    } else if (key == "ris_a") {
        sc.geometry.ris_a = to_xyz(line, key, value);
    } else if (key == "ris_b") {
        sc.geometry.ris_b = to_xyz(line, key, value);
    } else if (key == "relay") {
        sc.geometry.relay = to_xyz(line, key, value);
    } else if (key == "seed") {
        sc.master_seed = to_u64(line, key, value);
    } else if (key == "rounds") {
        sc.max_rounds = to_int(line, key, value);
        if (sc.max_rounds < 1) fail(line, key, "must be >= 1");
    } else if (key == "min_errors") {
        sc.min_errors = to_int(line, key, value);
        if (sc.min_errors < 0) fail(line, key, "must be >= 0");
    } else if (key == "min_bits") {
        sc.min_bits = to_int(line, key, value);
        if (sc.min_bits < 0) fail(line, key, "must be >= 0");
    } else if (key == "sweep_axis") {
        if (value == "p_max_dbm") job.axis = sim::SweepAxis::PMax;
        else if (value == "cee_db") job.axis = sim::SweepAxis::Cee;
        else if (value == "elements") job.axis = sim::SweepAxis::Elements;
        else fail(line, key, "expected p_max_dbm, cee_db, or elements");
    } else if (key == "sweep_values") {
        job.values = to_values(line, key, value);
        values_given = true;
    } else if (key == "out_dir") {
        if (value.empty()) fail(line, key, "empty path");
        plan.out_dir = value;
    } else if (key == "format") {
        if (value == "csv") plan.format = OutputFormat::Csv;
        else if (value == "plot") plan.format = OutputFormat::Plot;
        else if (value == "both") plan.format = OutputFormat::Both;
        else fail(line, key, "expected csv, plot, or both");
    } else if (key == "workers") {
        const std::int64_t w = to_int(line, key, value);
        if (w < 1) fail(line, key, "must be >= 1");
        plan.workers = static_cast<int>(w);
    } else {
        throw ParseError("line " + std::to_string(line) + ": unknown key '" + key + "'");
    }
}

double default_axis_value(const SweepJob& job) {
    switch (job.axis) {
        case sim::SweepAxis::PMax: return job.scenario.p_max_dbm;
        case sim::SweepAxis::Cee: return job.scenario.cee.value_db;
        case sim::SweepAxis::Elements: return static_cast<double>(job.scenario.elements);
    }
    return 0.0;
}

}  // namespace

RunPlan parse_config(const std::string& text) {
    RunPlan plan;
    SweepJob job;
    bool values_given = false;

    std::istringstream in(text);
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        if (const std::size_t hash = raw.find('#'); hash != std::string::npos)
            raw.erase(hash);
        const std::string s = trim(raw);
        if (s.empty()) continue;
        const std::size_t eq = s.find('=');
        if (eq == std::string::npos)
            throw ParseError("line " + std::to_string(line) + ": expected key = value, got '" + s + "'");
        const std::string key = trim(s.substr(0, eq));
        const std::string value = trim(s.substr(eq + 1));
        if (key.empty()) throw ParseError("line " + std::to_string(line) + ": missing key");
        if (value.empty()) fail(line, key, "missing value");
        apply_key(plan, job, values_given, line, key, value);
    }

    if (!values_given) job.values = {default_axis_value(job)};
    try {
        sim::validate(job.scenario);
        for (const double v : job.values)
            sim::validate(sim::with_axis_value(job.scenario, job.axis, v));
    } catch (const std::exception& e) {
        throw ParseError(std::string("config: ") + e.what());
    }
    plan.jobs.push_back(std::move(job));
    return plan;
}

std::string describe(const SweepJob& job) {
    const sim::Scenario& sc = job.scenario;
    std::ostringstream out;
    out << "name = " << job.name << '\n';
    out << "sweep_axis = " << sim::axis_name(job.axis) << '\n';
    out << "sweep_values = ";
    for (std::size_t i = 0; i < job.values.size(); ++i)
        out << (i ? ", " : "") << fmt(job.values[i]);
    out << '\n';
    out << "elements = " << sc.elements << '\n';
    out << "order = " << sc.order << '\n';
    out << "labeling = " << (sc.labeling == modem::Labeling::Gray ? "gray" : "natural") << '\n';
    out << "phase_mode = " << (sc.phase_mode == sim::PhaseMode::Random ? "random" : "optimal")
        << '\n';
    out << "metric = " << (sc.metric == sim::Metric::EndToEnd ? "end_to_end" : "uplink") << '\n';
    out << "waveform = " << (sc.waveform == sim::Waveform::Flat ? "flat" : "ofdm") << '\n';
    out << "fading = " << (sc.fading == channel::Fading::Unit ? "unit" : "rayleigh") << '\n';
    out << "power_control = " << (sc.power_control ? "on" : "off") << '\n';
    out << "single_user = " << (sc.single_user ? "on" : "off") << '\n';
    out << "p_max_dbm = " << fmt(sc.p_max_dbm) << '\n';
    out << "p_relay_dbm = " << fmt(sc.p_relay_dbm) << '\n';
    if (sc.cee_enabled) out << "cee_db = " << fmt(sc.cee.value_db) << '\n';
    else out << "cee_db = off\n";
    out << "cee_mode = " << (sc.cee.mode == channel::CeeMode::Relative ? "relative" : "absolute")
        << '\n';
    out << "bandwidth_hz = " << fmt(sc.bandwidth_hz) << '\n';
    out << "noise_figure_db = " << fmt(sc.noise_figure_db) << '\n';
    out << "carrier_hz = " << fmt(sc.geometry.carrier_hz) << '\n';
    out << "ue_a = " << fmt(sc.geometry.ue_a) << '\n';
    out << "ue_b = " << fmt(sc.geometry.ue_b) << '\n';
    out << "ris_a = " << fmt(sc.geometry.ris_a) << '\n';
    out << "ris_b = " << fmt(sc.geometry.ris_b) << '\n';
    out << "relay = " << fmt(sc.geometry.relay) << '\n';
    out << "seed = " << sc.master_seed << '\n';
    out << "rounds = " << sc.max_rounds << '\n';
    out << "min_errors = " << sc.min_errors << '\n';
    out << "min_bits = " << sc.min_bits << '\n';
    return out.str();
}

namespace {

std::vector<double> power_grid() {
    std::vector<double> v;
    for (double p = -10.0; p <= 70.0; p += 5.0) v.push_back(p);
    return v;
}

std::vector<double> cee_grid() {
    std::vector<double> v;
    for (double x = -110.0; x <= -10.0; x += 10.0) v.push_back(x);
    return v;
}

SweepJob power_sweep_job(const std::string& name, int order, Eigen::Index elements) {
    SweepJob job;
    job.name = name;
    job.scenario.order = order;
    job.scenario.elements = elements;
    job.scenario.max_rounds = 8192;
    job.scenario.min_errors = 100;
    job.axis = sim::SweepAxis::PMax;
    job.values = power_grid();
    return job;
}

// Per-curve transmit powers for the estimation-error study, chosen so every
// curve starts near BER = 1e-4 at the -110 dBm error level.
SweepJob cee_sweep_job(const std::string& name, int order, Eigen::Index elements,
                       double p_dbm) {
    SweepJob job;
    job.name = name;
    job.scenario.order = order;
    job.scenario.elements = elements;
    job.scenario.p_max_dbm = p_dbm;
    job.scenario.max_rounds = 20480;
    job.scenario.min_errors = 100;
    job.axis = sim::SweepAxis::Cee;
    job.values = cee_grid();
    return job;
}

}  // namespace

RunPlan recipe(const std::string& name) {
    RunPlan plan;
    plan.format = OutputFormat::Both;
    if (name == "fig2") {
        for (const Eigen::Index lv : {1, 4, 16, 64, 256})
            plan.jobs.push_back(power_sweep_job("fig2_qam4_L" + std::to_string(lv), 4, lv));
    } else if (name == "fig3") {
        for (const Eigen::Index lv : {1, 4, 16, 64, 256})
            plan.jobs.push_back(power_sweep_job("fig3_qam16_L" + std::to_string(lv), 16, lv));
    } else if (name == "fig4") {
        for (const int m : {4, 16}) {
            SweepJob job;
            job.name = "fig4_qam" + std::to_string(m) + "_L16_random";
            job.scenario.order = m;
            job.scenario.elements = 16;
            job.scenario.phase_mode = sim::PhaseMode::Random;
            job.scenario.max_rounds = 2048;
            job.scenario.min_errors = 100;
            job.scenario.min_bits = 100000;
            job.axis = sim::SweepAxis::PMax;
            job.values = {0.0, 10.0, 20.0, 30.0, 40.0, 50.0};
            plan.jobs.push_back(std::move(job));
        }
    } else if (name == "fig5") {
        plan.jobs.push_back(cee_sweep_job("fig5_qam4_L64", 4, 64, 15.0));
        plan.jobs.push_back(cee_sweep_job("fig5_qam4_L256", 4, 256, 2.5));
        plan.jobs.push_back(cee_sweep_job("fig5_qam16_L64", 16, 64, 22.0));
        plan.jobs.push_back(cee_sweep_job("fig5_qam16_L256", 16, 256, 9.5));
    } else {
        throw ParseError("unknown recipe '" + name + "' (known: fig2, fig3, fig4, fig5)");
    }
    return plan;
}

const std::vector<std::string>& recipe_names() {
    static const std::vector<std::string> names{"fig2", "fig3", "fig4", "fig5"};
    return names;
}

}  // namespace rispnc::config
