#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "rispnc/cli.hpp"
#include "rispnc/config.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    if (!in.good()) throw std::runtime_error("cannot read config file '" + path + "'");
    return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"RIS-assisted OFDM-PNC link-level BER simulator"};
    std::string config_path, recipe_name, out_dir, format;
    std::uint64_t seed = 0;
    int workers = 1;

    auto* opt_config =
        app.add_option("config", config_path, "configuration file (key = value lines)")
            ->check(CLI::ExistingFile);
    auto* opt_recipe =
        app.add_option("--recipe", recipe_name, "named experiment plan: fig2, fig3, fig4, fig5");
    auto* opt_seed =
        app.add_option("--seed", seed, "master seed (overrides config and PNC_RIS_SEED)");
    auto* opt_workers = app.add_option("--workers", workers, "worker threads per sweep point")
                            ->check(CLI::PositiveNumber);
    auto* opt_out = app.add_option("--out", out_dir, "output directory");
    auto* opt_format =
        app.add_option("--format", format, "csv | plot | both")
            ->check(CLI::IsMember({"csv", "plot", "both"}));
    opt_config->excludes(opt_recipe);
    CLI11_PARSE(app, argc, argv);

    try {
        rispnc::config::RunPlan plan;
        std::string plan_name;
        if (*opt_recipe) {
            plan = rispnc::config::recipe(recipe_name);
            plan_name = recipe_name;
        } else if (*opt_config) {
            plan = rispnc::config::parse_config(read_file(config_path));
            plan_name = plan.jobs.front().name;
        } else {
            std::cerr << "need a config file or --recipe (see --help)\n";
            return 2;
        }

        if (const char* env = std::getenv("PNC_RIS_SEED")) {
            char* end = nullptr;
            const unsigned long long v =
                (*env != '\0' && *env != '-') ? std::strtoull(env, &end, 10) : 0;
            if (*env == '\0' || *env == '-' || *end != '\0') {
                std::cerr << "PNC_RIS_SEED: expected an unsigned integer, got '" << env << "'\n";
                return 2;
            }
            for (auto& job : plan.jobs) job.scenario.master_seed = v;
        }
        if (*opt_seed)
            for (auto& job : plan.jobs) job.scenario.master_seed = seed;
        if (*opt_workers) plan.workers = workers;
        if (*opt_out) plan.out_dir = out_dir;
        if (*opt_format)
            plan.format = format == "csv"    ? rispnc::config::OutputFormat::Csv
                          : format == "plot" ? rispnc::config::OutputFormat::Plot
                                             : rispnc::config::OutputFormat::Both;

        return rispnc::cli::run(plan, plan_name, std::cout, std::cerr);
    } catch (const rispnc::config::ParseError& e) {
        std::cerr << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << e.what() << '\n';
        return 1;
    }
}
