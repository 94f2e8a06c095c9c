#include "rispnc/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace rispnc::report {

namespace {

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string fmt2(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f", x);
    return buf;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::string tok;
    std::istringstream in(line);
    while (std::getline(in, tok, ',')) out.push_back(tok);
    return out;
}

}  // namespace

std::string to_csv(const config::SweepJob& job, const std::vector<sim::BerPoint>& points) {
    std::ostringstream out;
    std::istringstream cfg(config::describe(job));
    std::string line;
    while (std::getline(cfg, line)) out << "# " << line << '\n';

    out << "sweep_axis,sweep_value,L,M,phase_mode,cee_db,p_max_dbm,bits,errors,ber,"
           "dropped_rounds\n";
    for (const sim::BerPoint& pt : points) {
        const sim::Scenario sc = sim::with_axis_value(job.scenario, job.axis, pt.swept_value);
        out << sim::axis_name(job.axis) << ',' << fmt(pt.swept_value) << ',' << sc.elements << ','
            << sc.order << ','
            << (sc.phase_mode == sim::PhaseMode::Random ? "random" : "optimal") << ','
            << (sc.cee_enabled ? fmt(sc.cee.value_db) : std::string("off")) << ','
            << fmt(sc.p_max_dbm) << ',' << pt.bits << ',' << pt.errors << ',' << fmt(pt.ber)
            << ',' << pt.dropped_rounds << '\n';
    }
    return out.str();
}

Series read_csv(const std::string& text) {
    Series series;
    std::istringstream in(text);
    std::string line;
    bool header_seen = false;
    std::size_t col_x = 0, col_ber = 0, columns = 0;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line.front() == '#') {
            const std::size_t at = line.find("name = ");
            if (at != std::string::npos) series.name = line.substr(at + 7);
            continue;
        }
        const std::vector<std::string> cells = split_csv(line);
        if (!header_seen) {
            const auto col_of = [&cells, &line](const std::string& name) {
                const auto it = std::find(cells.begin(), cells.end(), name);
                if (it == cells.end())
                    throw std::runtime_error("csv: missing column '" + name + "' in '" + line + "'");
                return static_cast<std::size_t>(it - cells.begin());
            };
            col_x = col_of("sweep_value");
            col_ber = col_of("ber");
            columns = cells.size();
            header_seen = true;
            continue;
        }
        if (cells.size() != columns)
            throw std::runtime_error("csv: row with " + std::to_string(cells.size()) +
                                     " cells, expected " + std::to_string(columns));
        char* end = nullptr;
        const double x = std::strtod(cells[col_x].c_str(), &end);
        if (end != cells[col_x].c_str() + cells[col_x].size())
            throw std::runtime_error("csv: bad sweep_value '" + cells[col_x] + "'");
        const double ber = std::strtod(cells[col_ber].c_str(), &end);
        if (end != cells[col_ber].c_str() + cells[col_ber].size())
            throw std::runtime_error("csv: bad ber '" + cells[col_ber] + "'");
        series.x.push_back(x);
        series.ber.push_back(ber);
    }
    if (!header_seen) throw std::runtime_error("csv: no header line");
    return series;
}

namespace {

constexpr double kWidth = 880.0, kHeight = 560.0;
constexpr double kLeft = 90.0, kRight = 30.0, kTop = 50.0, kBottom = 70.0;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

double nice_step(double span) {
    const double raw = span / 7.0;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    const double r = raw / mag;
    if (r <= 1.0) return mag;
    if (r <= 2.0) return 2.0 * mag;
    if (r <= 5.0) return 5.0 * mag;
    return 10.0 * mag;
}

std::string xml_escape(const std::string& s) {
    std::string out;
    for (const char c : s) {
        if (c == '&') out += "&amp;";
        else if (c == '<') out += "&lt;";
        else if (c == '>') out += "&gt;";
        else out += c;
    }
    return out;
}

}  // namespace

std::string render_svg(const std::string& title, const std::string& x_label,
                       const std::vector<Series>& series) {
    double x_min = 0.0, x_max = 1.0, ber_min = 1.0, ber_max = 1e-6;
    bool any_x = false, any_ber = false;
    for (const Series& s : series) {
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            if (!any_x) { x_min = x_max = s.x[i]; any_x = true; }
            x_min = std::min(x_min, s.x[i]);
            x_max = std::max(x_max, s.x[i]);
            if (s.ber[i] > 0.0) {
                if (!any_ber) { ber_min = ber_max = s.ber[i]; any_ber = true; }
                ber_min = std::min(ber_min, s.ber[i]);
                ber_max = std::max(ber_max, s.ber[i]);
            }
        }
    }
    if (!any_x) { x_min = 0.0; x_max = 1.0; }
    if (x_min == x_max) { x_min -= 1.0; x_max += 1.0; }
    if (!any_ber) { ber_min = 1e-6; ber_max = 1.0; }
    int dec_lo = static_cast<int>(std::floor(std::log10(ber_min)));
    int dec_hi = static_cast<int>(std::ceil(std::log10(ber_max)));
    if (dec_hi > 0) dec_hi = 0;
    if (dec_lo >= dec_hi) dec_lo = dec_hi - 1;

    const double plot_w = kWidth - kLeft - kRight;
    const double plot_h = kHeight - kTop - kBottom;
    const auto px = [&](double x) { return kLeft + (x - x_min) / (x_max - x_min) * plot_w; };
    const auto py = [&](double ber) {
        const double t = (std::log10(ber) - dec_lo) / static_cast<double>(dec_hi - dec_lo);
        return kTop + (1.0 - t) * plot_h;
    };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
        << kHeight << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg << "<text x=\"" << kWidth / 2 << "\" y=\"28\" text-anchor=\"middle\" "
           "font-family=\"sans-serif\" font-size=\"17\" fill=\"#222\">"
        << xml_escape(title) << "</text>\n";

    // grid + ticks
    svg << "<g font-family=\"sans-serif\" font-size=\"12\" fill=\"#444\">\n";
    for (int d = dec_lo; d <= dec_hi; ++d) {
        const double y = py(std::pow(10.0, d));
        svg << "<line x1=\"" << kLeft << "\" y1=\"" << fmt2(y) << "\" x2=\"" << kLeft + plot_w
            << "\" y2=\"" << fmt2(y) << "\" stroke=\"#ddd\"/>\n";
        svg << "<text x=\"" << kLeft - 8 << "\" y=\"" << fmt2(y + 4)
            << "\" text-anchor=\"end\">1e" << d << "</text>\n";
    }
    const double step = nice_step(x_max - x_min);
    const double tick0 = std::ceil(x_min / step) * step;
    for (double t = tick0; t <= x_max + 1e-9; t += step) {
        const double x = px(t);
        svg << "<line x1=\"" << fmt2(x) << "\" y1=\"" << kTop << "\" x2=\"" << fmt2(x)
            << "\" y2=\"" << kTop + plot_h << "\" stroke=\"#eee\"/>\n";
        char label[32];
        std::snprintf(label, sizeof label, "%g", t + 0.0);
        svg << "<text x=\"" << fmt2(x) << "\" y=\"" << kTop + plot_h + 20
            << "\" text-anchor=\"middle\">" << label << "</text>\n";
    }
    svg << "</g>\n";

    // axes
    svg << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << plot_w
        << "\" height=\"" << plot_h << "\" fill=\"none\" stroke=\"#333\"/>\n";
    svg << "<text x=\"" << kLeft + plot_w / 2 << "\" y=\"" << kHeight - 22
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\" "
           "fill=\"#222\">"
        << xml_escape(x_label) << "</text>\n";
    svg << "<text x=\"24\" y=\"" << kTop + plot_h / 2
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\" fill=\"#222\" "
           "transform=\"rotate(-90 24 "
        << kTop + plot_h / 2 << ")\">BER</text>\n";

    // series
    for (std::size_t s = 0; s < series.size(); ++s) {
        const char* color = kPalette[s % (sizeof kPalette / sizeof kPalette[0])];
        std::ostringstream pts;
        for (std::size_t i = 0; i < series[s].x.size(); ++i) {
            if (!(series[s].ber[i] > 0.0)) continue;
            pts << fmt2(px(series[s].x[i])) << ',' << fmt2(py(series[s].ber[i])) << ' ';
        }
        svg << "<polyline points=\"" << pts.str() << "\" fill=\"none\" stroke=\"" << color
            << "\" stroke-width=\"1.8\"/>\n";
        for (std::size_t i = 0; i < series[s].x.size(); ++i) {
            if (!(series[s].ber[i] > 0.0)) continue;
            svg << "<circle cx=\"" << fmt2(px(series[s].x[i])) << "\" cy=\""
                << fmt2(py(series[s].ber[i])) << "\" r=\"3\" fill=\"" << color << "\"/>\n";
        }
    }

    // legend
    svg << "<g font-family=\"sans-serif\" font-size=\"12\">\n";
    const double lx = kLeft + plot_w - 180.0;
    double ly = kTop + 14.0;
    for (std::size_t s = 0; s < series.size(); ++s) {
        const char* color = kPalette[s % (sizeof kPalette / sizeof kPalette[0])];
        svg << "<line x1=\"" << lx << "\" y1=\"" << fmt2(ly - 4) << "\" x2=\"" << lx + 24
            << "\" y2=\"" << fmt2(ly - 4) << "\" stroke=\"" << color
            << "\" stroke-width=\"2\"/>\n";
        svg << "<circle cx=\"" << lx + 12 << "\" cy=\"" << fmt2(ly - 4) << "\" r=\"3\" fill=\""
            << color << "\"/>\n";
        svg << "<text x=\"" << lx + 30 << "\" y=\"" << fmt2(ly) << "\" fill=\"#222\">"
            << xml_escape(series[s].name) << "</text>\n";
        ly += 18.0;
    }
    svg << "</g>\n</svg>\n";
    return svg.str();
}

}  // namespace rispnc::report
