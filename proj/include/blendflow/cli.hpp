#pragma once

#include <optional>
#include <string>
#include <vector>

namespace blendflow::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitSolver = 3;
inline constexpr int kExitNoCertificate = 4;
inline constexpr int kExitSonic = 5;

/// run: frames.csv, bounds.json and optional snapshots/ under out_dir.
int cmd_run(const std::string& scenario_path, const std::string& out_dir,
            const std::vector<double>& extra_snapshots = {});

/// certify: PASS/FAIL lines on stdout plus cert.json under out_dir.
int cmd_certify(const std::string& frames_path, const std::string& bounds_path,
                std::optional<double> t_star, const std::string& out_dir);

/// compare: compare.csv under out_dir plus a summary line.
int cmd_compare(const std::string& scenario_path, const std::string& out_dir);

/// stationary: stationary.csv under out_dir.
int cmd_stationary(const std::string& scenario_path,
                   const std::string& out_dir);

}  // namespace blendflow::cli
