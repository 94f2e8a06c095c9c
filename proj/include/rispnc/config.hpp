#pragma once
// Run configuration: a line-oriented key = value document resolved against
// the standard simulation defaults, plus four named recipe plans (fig2..fig5)
// covering the headline experiments: power sweeps per RIS size for 4-QAM and
// 16-QAM, the random-phase baseline, and the estimation-error sensitivity
// study.
//
// '#' starts a comment, blank lines are ignored, later keys win. Every
// malformed line, unknown key, or out-of-range value raises ParseError with
// the key name and 1-based line number. describe() serializes a job back to
// the same key = value syntax at full precision — it is what the CSV writer
// embeds, so any result file carries a reparseable copy of its own config.

#include <stdexcept>
#include <string>
#include <vector>

#include "rispnc/sim.hpp"

namespace rispnc::config {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class OutputFormat { Csv, Plot, Both };

// One sweep: a fully resolved scenario, the swept axis, and the value list.
struct SweepJob {
    std::string name = "sweep";  // output file stem
    sim::Scenario scenario{};
    sim::SweepAxis axis = sim::SweepAxis::PMax;
    std::vector<double> values;
};

struct RunPlan {
    std::vector<SweepJob> jobs;
    std::string out_dir = ".";
    OutputFormat format = OutputFormat::Csv;
    int workers = 1;
};

// Parse one document into a single-job plan. An empty document yields the
// full default configuration (L = 1, 4-QAM, Table-style geometry, one point
// at the default transmit power).
RunPlan parse_config(const std::string& text);

// Resolved job as a key = value block, reparseable by parse_config.
std::string describe(const SweepJob& job);

// Named recipes; throws ParseError on an unknown name.
RunPlan recipe(const std::string& name);
const std::vector<std::string>& recipe_names();

}  // namespace rispnc::config
