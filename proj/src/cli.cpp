#include "rispnc/cli.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <vector>

#include "rispnc/report.hpp"

namespace rispnc::cli {

namespace {

namespace fs = std::filesystem;

const char* x_label(sim::SweepAxis axis) {
    switch (axis) {
        case sim::SweepAxis::PMax: return "P_max [dBm]";
        case sim::SweepAxis::Cee: return "CEE variance [dBm]";
        case sim::SweepAxis::Elements: return "RIS elements L";
    }
    return "";
}

bool write_file(const fs::path& path, const std::string& content, std::ostream& err) {
    std::ofstream file(path, std::ios::binary);
    if (file) file << content;
    if (!file || !file.flush()) {
        err << "cannot write '" << path.string() << "'\n";
        return false;
    }
    return true;
}

void print_summary(std::ostream& out, const config::SweepJob& job,
                   const std::vector<sim::BerPoint>& points) {
    out << job.name << ": " << sim::axis_name(job.axis) << " sweep, " << points.size()
        << (points.size() == 1 ? " point\n" : " points\n");
    char buf[160];
    std::snprintf(buf, sizeof buf, "%14s%14s%14s%14s%10s\n", sim::axis_name(job.axis), "bits",
                  "errors", "ber", "dropped");
    out << buf;
    for (const sim::BerPoint& pt : points) {
        std::snprintf(buf, sizeof buf, "%14.6g%14lld%14lld%14.6e%10lld\n", pt.swept_value,
                      static_cast<long long>(pt.bits), static_cast<long long>(pt.errors), pt.ber,
                      static_cast<long long>(pt.dropped_rounds));
        out << buf;
    }
}

}  // namespace

int run(const config::RunPlan& plan, const std::string& plan_name, std::ostream& out,
        std::ostream& err) {
    std::error_code ec;
    fs::create_directories(plan.out_dir, ec);
    if (ec) {
        err << "cannot create output directory '" << plan.out_dir << "': " << ec.message()
            << '\n';
        return 1;
    }

    std::vector<fs::path> csv_paths;
    for (const config::SweepJob& job : plan.jobs) {
        const std::vector<sim::BerPoint> points =
            sim::sweep(job.scenario, job.axis, job.values, plan.workers);
        const fs::path path = fs::path(plan.out_dir) / (job.name + ".csv");
        if (!write_file(path, report::to_csv(job, points), err)) return 1;
        csv_paths.push_back(path);
        print_summary(out, job, points);
        out << "wrote " << path.string() << '\n';
    }

    if (plan.format != config::OutputFormat::Csv) {
        std::vector<report::Series> series;
        for (const fs::path& path : csv_paths) {
            std::ifstream file(path, std::ios::binary);
            std::ostringstream content;
            content << file.rdbuf();
            if (!file.good()) {
                err << "cannot read back '" << path.string() << "'\n";
                return 1;
            }
            series.push_back(report::read_csv(content.str()));
        }
        const fs::path path = fs::path(plan.out_dir) / (plan_name + ".svg");
        if (!write_file(path, report::render_svg(plan_name, x_label(plan.jobs.front().axis), series),
                        err))
            return 1;
        out << "wrote " << path.string() << '\n';
    }
    return 0;
}

}  // namespace rispnc::cli
