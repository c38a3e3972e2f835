#include "blendflow/io.hpp"

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "blendflow/errors.hpp"

namespace blendflow::io {

std::string g17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary);  // fixed newlines everywhere
    if (!out) {
        throw ConfigError("cannot write '" + path + "'");
    }
    return out;
}

}  // namespace

void write_frames_csv(const std::string& path,
                      const std::vector<DiagnosticsFrame>& frames) {
    auto out = open_out(path);
    const int n = frames.empty() ? 0 : static_cast<int>(frames[0].rho_in.size());
    out << "t,lyapunov,b_hat,b_l,b_0,integral_i,energy_total,energy_mix,"
           "sign_uniform";
    for (int i = 1; i <= n; ++i) {
        out << ",rho_in_" << i << ",v_in_" << i << ",rho_out_" << i << ",v_out_"
            << i;
    }
    out << "\n";
    for (const auto& f : frames) {
        out << g17(f.t) << ',' << g17(f.lyapunov) << ',' << g17(f.b_hat) << ','
            << g17(f.b_l) << ',' << g17(f.b_0) << ',' << g17(f.integral_i)
            << ',' << g17(f.energy_total) << ',' << g17(f.energy_mix) << ','
            << (f.sign_uniform ? 1 : 0);
        for (int i = 0; i < n; ++i) {
            out << ',' << g17(f.rho_in[i]) << ',' << g17(f.v_in[i]) << ','
                << g17(f.rho_out[i]) << ',' << g17(f.v_out[i]);
        }
        out << "\n";
    }
}

std::vector<DiagnosticsFrame> read_frames_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot read '" + path + "'");
    }
    std::string line;
    if (!std::getline(in, line)) {
        throw ConfigError("frames file is empty: " + path);
    }
    std::vector<std::string> header;
    {
        std::stringstream ss(line);
        std::string tok;
        while (std::getline(ss, tok, ',')) header.push_back(tok);
    }
    std::map<std::string, int> col;
    for (std::size_t j = 0; j < header.size(); ++j) {
        col[header[j]] = static_cast<int>(j);
    }
    for (const char* required : {"t", "lyapunov", "b_hat", "b_l", "b_0",
                                 "integral_i"}) {
        if (!col.count(required)) {
            throw ConfigError(std::string("frames file lacks column '") +
                              required + "'");
        }
    }
    int n = 0;
    while (col.count("rho_in_" + std::to_string(n + 1))) ++n;

    std::vector<DiagnosticsFrame> frames;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<double> row;
        std::stringstream ss(line);
        std::string tok;
        while (std::getline(ss, tok, ',')) row.push_back(std::stod(tok));
        if (row.size() != header.size()) {
            throw ConfigError("frames file row width mismatch");
        }
        DiagnosticsFrame f;
        f.t = row[col["t"]];
        f.lyapunov = row[col["lyapunov"]];
        f.b_hat = row[col["b_hat"]];
        f.b_l = row[col["b_l"]];
        f.b_0 = row[col["b_0"]];
        f.integral_i = row[col["integral_i"]];
        if (col.count("energy_total")) f.energy_total = row[col["energy_total"]];
        if (col.count("energy_mix")) f.energy_mix = row[col["energy_mix"]];
        if (col.count("sign_uniform")) {
            f.sign_uniform = row[col["sign_uniform"]] != 0.0;
        }
        for (int i = 1; i <= n; ++i) {
            f.rho_in.push_back(row[col["rho_in_" + std::to_string(i)]]);
            f.v_in.push_back(row[col["v_in_" + std::to_string(i)]]);
            f.rho_out.push_back(row[col["rho_out_" + std::to_string(i)]]);
            f.v_out.push_back(row[col["v_out_" + std::to_string(i)]]);
        }
        frames.push_back(std::move(f));
    }
    return frames;
}

void write_bounds_json(const std::string& path, const BoundsReport& r) {
    nlohmann::ordered_json j;
    j["M"] = r.M;
    j["N"] = r.N;
    j["eps_hat"] = r.eps_hat;
    j["beta"] = r.beta;
    j["beta_positive"] = r.beta_positive;
    j["S0"] = r.S0;
    j["omega_bar"] = r.omega_bar;
    j["theta"] = r.theta;
    j["length"] = r.length;
    j["frames_used"] = r.frames_used;
    auto out = open_out(path);
    out << j.dump(2) << "\n";
}

BoundsReport read_bounds_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot read '" + path + "'");
    }
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("malformed bounds file: " + std::string(e.what()));
    }
    BoundsReport r;
    r.M = j.at("M").get<double>();
    r.N = j.at("N").get<double>();
    r.eps_hat = j.at("eps_hat").get<double>();
    r.beta = j.at("beta").get<double>();
    r.beta_positive = j.at("beta_positive").get<bool>();
    r.S0 = j.at("S0").get<double>();
    r.omega_bar = j.value("omega_bar", 0.0);
    r.theta = j.value("theta", 0.0);
    r.length = j.value("length", 0.0);
    r.frames_used = j.value("frames_used", 0L);
    return r;
}

void write_cert_json(const std::string& path, const CertReport& r) {
    nlohmann::ordered_json j;
    j["beta"] = r.beta;
    j["eps_hat"] = r.eps_hat;
    j["rel_tol"] = r.options.rel_tol;
    j["abs_tol"] = r.options.abs_tol;
    j["envelope_i"]["pass"] = r.pass_i;
    j["envelope_i"]["max_excess"] = r.max_excess_i;
    if (!r.pass_i) {
        j["envelope_i"]["first_violation_t"] = r.first_violation_t_i;
    }
    if (r.has_part_ii) {
        j["envelope_ii"]["t_star"] = r.t_star;
        j["envelope_ii"]["hypothesis_bhat_le_i"] = r.hypothesis_bhat_le_i;
        j["envelope_ii"]["hypothesis_i_ge_bl"] = r.hypothesis_i_ge_bl;
        j["envelope_ii"]["pass"] = r.pass_ii;
        j["envelope_ii"]["max_excess"] = r.max_excess_ii;
        if (!r.pass_ii) {
            j["envelope_ii"]["first_violation_t"] = r.first_violation_t_ii;
        }
    }
    auto out = open_out(path);
    out << j.dump(2) << "\n";
}

void write_compare_csv(const std::string& path, const ComparisonReport& r) {
    auto out = open_out(path);
    out << "t,lyap_full,s0,field_distance\n";
    for (std::size_t j = 0; j < r.times.size(); ++j) {
        out << g17(r.times[j]) << ',' << g17(r.lyap_full[j]) << ',' << g17(r.S0)
            << ',' << g17(r.field_distance[j]) << "\n";
    }
}

void write_state_csv(const std::string& path, const MixtureState& s) {
    auto out = open_out(path);
    out << "x";
    for (int i = 1; i <= s.components(); ++i) {
        out << ",rho_" << i << ",v_" << i;
    }
    out << "\n";
    for (int k = 0; k < s.cells(); ++k) {
        out << g17(s.grid.x(k));
        for (int i = 0; i < s.components(); ++i) {
            out << ',' << g17(s.rho[i][k]) << ',' << g17(s.v[i][k]);
        }
        out << "\n";
    }
}

}  // namespace blendflow::io
