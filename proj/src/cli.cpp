#include "blendflow/cli.hpp"

#include <cstdio>
#include <filesystem>
#include <iostream>

#include "blendflow/errors.hpp"
#include "blendflow/io.hpp"
#include "blendflow/oracles.hpp"
#include "blendflow/scenario.hpp"

namespace blendflow::cli {

namespace fs = std::filesystem;

namespace {

void ensure_dir(const std::string& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) {
        throw ConfigError("cannot create output directory '" + dir + "'");
    }
}

std::string join(const std::string& dir, const std::string& name) {
    return (fs::path(dir) / name).string();
}

// Maps library errors onto the documented exit codes.
int classify(const std::exception& e) {
    if (dynamic_cast<const SonicError*>(&e)) return kExitSonic;
    if (dynamic_cast<const ConfigError*>(&e)) return kExitConfig;
    return kExitSolver;
}

}  // namespace

int cmd_run(const std::string& scenario_path, const std::string& out_dir,
            const std::vector<double>& extra_snapshots) {
    try {
        Scenario sc = load_scenario(scenario_path);
        sc.snapshot_times.insert(sc.snapshot_times.end(),
                                 extra_snapshots.begin(),
                                 extra_snapshots.end());
        ensure_dir(out_dir);

        const Trajectory traj = run(sc);
        io::write_frames_csv(join(out_dir, "frames.csv"), traj.frames);
        const BoundsReport bounds =
            running_bounds(traj.frames, sc.physics, sc.length);
        io::write_bounds_json(join(out_dir, "bounds.json"), bounds);

        if (!traj.snapshots.empty()) {
            ensure_dir(join(out_dir, "snapshots"));
            for (const auto& [t, state] : traj.snapshots) {
                char name[64];
                std::snprintf(name, sizeof(name), "state_t%.9g.csv", t);
                io::write_state_csv(join(join(out_dir, "snapshots"), name),
                                    state);
            }
        }
        if (!traj.compatibility.pass) {
            std::cout << "warning: C1 compatibility residual "
                      << io::g17(traj.compatibility.max_residual())
                      << " exceeds tolerance "
                      << io::g17(traj.compatibility.tolerance) << "\n";
        }
        std::cout << "run: " << traj.frames.size() << " frames, " << traj.steps
                  << " steps, final lyapunov "
                  << io::g17(traj.frames.back().lyapunov) << ", beta "
                  << io::g17(bounds.beta) << "\n";
        return kExitOk;
    } catch (const std::exception& e) {
        std::cerr << "run failed: " << e.what() << "\n";
        return classify(e);
    }
}

int cmd_certify(const std::string& frames_path, const std::string& bounds_path,
                std::optional<double> t_star, const std::string& out_dir) {
    try {
        const auto frames = io::read_frames_csv(frames_path);
        const auto bounds = io::read_bounds_json(bounds_path);
        ensure_dir(out_dir);

        if (!(bounds.beta > 0.0)) {
            std::cout << "FAIL envelope: beta = " << io::g17(bounds.beta)
                      << " <= 0 (omega_bar " << io::g17(bounds.omega_bar)
                      << " does not dominate M " << io::g17(bounds.M)
                      << " + N " << io::g17(bounds.N) << ")\n";
            return kExitNoCertificate;
        }

        const CertReport rep =
            certify_envelope(frames, bounds.beta, bounds.eps_hat, t_star);
        io::write_cert_json(join(out_dir, "cert.json"), rep);

        std::cout << (rep.pass_i ? "PASS" : "FAIL") << " envelope (i)";
        if (!rep.pass_i) {
            std::cout << " first violation at t="
                      << io::g17(rep.first_violation_t_i);
        }
        std::cout << "\n";
        if (rep.has_part_ii) {
            std::cout << (rep.hypothesis_bhat_le_i ? "PASS" : "FAIL")
                      << " hypothesis b_hat <= I on [t_star, T]\n";
            std::cout << (rep.hypothesis_i_ge_bl ? "PASS" : "FAIL")
                      << " hypothesis I >= b_l on [t_star, T]\n";
            std::cout << (rep.pass_ii ? "PASS" : "FAIL") << " envelope (ii)";
            if (!rep.pass_ii) {
                std::cout << " first violation at t="
                          << io::g17(rep.first_violation_t_ii);
            }
            std::cout << "\n";
        }
        return kExitOk;
    } catch (const std::exception& e) {
        std::cerr << "certify failed: " << e.what() << "\n";
        return classify(e);
    }
}

int cmd_compare(const std::string& scenario_path, const std::string& out_dir) {
    try {
        Scenario sc = load_scenario(scenario_path);
        ensure_dir(out_dir);
        const ComparisonReport rep = compare_models(sc, sc.physics.omega_bar);
        io::write_compare_csv(join(out_dir, "compare.csv"), rep);
        std::cout << "compare: terminal lyapunov "
                  << io::g17(rep.lyap_full.back()) << ", S0 " << io::g17(rep.S0)
                  << ", terminal field distance "
                  << io::g17(rep.field_distance.back()) << "\n";
        return kExitOk;
    } catch (const std::exception& e) {
        std::cerr << "compare failed: " << e.what() << "\n";
        return classify(e);
    }
}

int cmd_stationary(const std::string& scenario_path,
                   const std::string& out_dir) {
    try {
        Scenario sc = load_scenario(scenario_path);
        ensure_dir(out_dir);
        const Grid grid{sc.length, sc.disc.cells};
        const auto laws = sc.laws();
        const auto bc = sc.boundary();
        const double vbar = bc.vbar(0.0);
        if (!(vbar > 0.0)) {
            throw ConfigError("stationary: inflow velocity at t=0 must be "
                              "positive");
        }

        MixtureState profile;
        if (sc.stationary_match_outlet) {
            std::vector<double> target;
            for (const auto& sig : bc.rhobar) target.push_back(sig(0.0));
            const auto spec =
                stationary_shooting(target, vbar, sc.physics, laws, grid);
            profile = stationary_profile(spec, grid);
        } else {
            StationarySpec spec;
            spec.params = sc.physics;
            spec.laws = laws;
            if (!sc.stationary_flow_rates.empty()) {
                if (sc.stationary_flow_rates.size() != laws.size()) {
                    throw ConfigError("stationary: one flow rate per "
                                      "component required");
                }
                spec.flow_rates = sc.stationary_flow_rates;
                for (double q : spec.flow_rates) {
                    spec.rho_inlet.push_back(q / vbar);
                }
            } else {
                const auto init = sc.initial_state();
                for (int i = 0; i < init.components(); ++i) {
                    spec.rho_inlet.push_back(init.rho[i][0]);
                    spec.flow_rates.push_back(init.rho[i][0] * vbar);
                }
            }
            profile = stationary_profile(spec, grid);
        }
        io::write_state_csv(join(out_dir, "stationary.csv"), profile);
        std::cout << "stationary: wrote " << grid.cells << " cells for "
                  << laws.size() << " components\n";
        return kExitOk;
    } catch (const std::exception& e) {
        std::cerr << "stationary failed: " << e.what() << "\n";
        return classify(e);
    }
}

}  // namespace blendflow::cli
