#pragma once
// Result serialization: CSV emission with an embedded '#' config header, a
// matching reader, and a static SVG line-chart renderer. The CSV is the
// source of truth; plots are rendered from parsed CSV content only, so a
// re-render from file is lossless with respect to plotted values.

#include <string>
#include <vector>

#include "rispnc/config.hpp"
#include "rispnc/sim.hpp"

namespace rispnc::report {

// Columns: sweep_axis, sweep_value, L, M, phase_mode, cee_db, p_max_dbm,
// bits, errors, ber, dropped_rounds. Each row reflects the effective
// scenario of its point (the swept column varies, the rest are constant).
// '#'-prefixed header lines carry the resolved config and seed. LF endings,
// full double precision.
std::string to_csv(const config::SweepJob& job, const std::vector<sim::BerPoint>& points);

struct Series {
    std::string name;
    std::vector<double> x;    // sweep_value column
    std::vector<double> ber;  // ber column
};

// Reads back what to_csv wrote (name from the embedded config block).
// Throws std::runtime_error on missing columns or malformed rows.
Series read_csv(const std::string& text);

// Log-y BER chart, one polyline per series; non-positive BER points are
// left out (they have no position on a log axis). Self-contained SVG.
std::string render_svg(const std::string& title, const std::string& x_label,
                       const std::vector<Series>& series);

}  // namespace rispnc::report
