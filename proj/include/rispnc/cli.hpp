#pragma once
// Plan execution: run every sweep of a plan, write one CSV per sweep (plus
// one SVG per plan when plots are requested), and print a per-point summary
// table. Plots are rendered from the CSV files as written to disk, never
// from in-memory state.

#include <iosfwd>
#include <string>

#include "rispnc/config.hpp"

namespace rispnc::cli {

// Returns a process exit status: 0 on success, 1 on I/O failure (diagnostic
// on err). Simulation/validation exceptions propagate to the caller.
int run(const config::RunPlan& plan, const std::string& plan_name, std::ostream& out,
        std::ostream& err);

}  // namespace rispnc::cli
