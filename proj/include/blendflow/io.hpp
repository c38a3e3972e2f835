#pragma once

#include <string>
#include <vector>

#include "blendflow/diagnostics.hpp"
#include "blendflow/driftflux.hpp"
#include "blendflow/mixture.hpp"

namespace blendflow::io {

/// Shortest representation that round-trips the double exactly.
std::string g17(double x);

void write_frames_csv(const std::string& path,
                      const std::vector<DiagnosticsFrame>& frames);
/// Reads a frames file back; boundary-value columns become per-component
/// vectors again. Column order is taken from the header row.
std::vector<DiagnosticsFrame> read_frames_csv(const std::string& path);

void write_bounds_json(const std::string& path, const BoundsReport& r);
BoundsReport read_bounds_json(const std::string& path);

void write_cert_json(const std::string& path, const CertReport& r);

void write_compare_csv(const std::string& path, const ComparisonReport& r);

void write_state_csv(const std::string& path, const MixtureState& s);

}  // namespace blendflow::io
