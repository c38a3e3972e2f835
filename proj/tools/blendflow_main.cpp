#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "blendflow/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"blendflow: multicomponent gas pipeline flow simulator and "
                 "velocity-synchronization diagnostics"};
    app.require_subcommand(1);

    std::string scenario_path, frames_path, bounds_path;
    std::string out_dir = "out";
    std::vector<double> snapshots;
    double t_star_value = 0.0;

    auto* run = app.add_subcommand("run", "integrate a scenario and write "
                                          "frames.csv / bounds.json");
    run->add_option("scenario", scenario_path, "scenario TOML file")
        ->required();
    run->add_option("--out", out_dir, "output directory");
    run->add_option("--snapshots", snapshots,
                    "additional snapshot times (comma separated)")
        ->delimiter(',');

    auto* certify = app.add_subcommand(
        "certify", "check the exponential decay envelope of a finished run");
    certify->add_option("frames", frames_path, "frames.csv from run")
        ->required();
    certify->add_option("bounds", bounds_path, "bounds.json from run")
        ->required();
    auto* t_star_opt =
        certify->add_option("--t-star", t_star_value,
                            "start of the interval for envelope (ii)");
    certify->add_option("--out", out_dir, "output directory for cert.json");

    auto* compare = app.add_subcommand(
        "compare", "run the full and the drift-flux model side by side");
    compare->add_option("scenario", scenario_path, "scenario TOML file")
        ->required();
    compare->add_option("--out", out_dir, "output directory");

    auto* stationary = app.add_subcommand(
        "stationary", "integrate the stationary-profile equations");
    stationary->add_option("scenario", scenario_path, "scenario TOML file")
        ->required();
    stationary->add_option("--out", out_dir, "output directory");

    CLI11_PARSE(app, argc, argv);

    if (run->parsed()) {
        return blendflow::cli::cmd_run(scenario_path, out_dir, snapshots);
    }
    if (certify->parsed()) {
        std::optional<double> t_star;
        if (t_star_opt->count() > 0) t_star = t_star_value;
        return blendflow::cli::cmd_certify(frames_path, bounds_path, t_star,
                                           out_dir);
    }
    if (compare->parsed()) {
        return blendflow::cli::cmd_compare(scenario_path, out_dir);
    }
    return blendflow::cli::cmd_stationary(scenario_path, out_dir);
}
