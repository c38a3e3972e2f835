#include "blendflow/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include "blendflow/errors.hpp"
#include "blendflow/oracles.hpp"
#include "blendflow/toml_lite.hpp"

namespace blendflow {

PressureLaw LawSpec::make() const {
    if (kind == "isothermal_ideal") {
        return PressureLaw::isothermal_ideal(sound_speed);
    }
    if (kind == "isentropic") {
        return PressureLaw::isentropic(coeff, gamma);
    }
    if (kind == "tabulated") {
        return PressureLaw::tabulated(table_rho, table_p);
    }
    throw ConfigError("scenario: unknown pressure law '" + kind + "'");
}

TimeSignal SignalSpec::make() const {
    if (kind == "constant") return TimeSignal::constant(value);
    if (kind == "ramp") return TimeSignal::ramp(start, rate);
    if (kind == "sinusoid") {
        return TimeSignal::sinusoid(mean, amplitude, frequency, phase);
    }
    if (kind == "table") return TimeSignal::table(t, values);
    throw ConfigError("scenario: unknown signal kind '" + kind + "'");
}

std::vector<PressureLaw> Scenario::laws() const {
    std::vector<PressureLaw> out;
    for (const auto& c : components) out.push_back(c.make());
    return out;
}

void Scenario::validate() const {
    if (components.empty()) {
        throw ConfigError("scenario: at least one component required");
    }
    if (disc.cells < 4) {
        throw ConfigError("scenario: need at least 4 grid cells");
    }
    if (!(disc.cfl > 0.0 && disc.cfl <= 1.0)) {
        throw ConfigError("scenario: CFL number must lie in (0, 1]");
    }
    if (!(length > 0.0)) {
        throw ConfigError("scenario: pipe length must be positive");
    }
    if (!(disc.t_end >= 0.0)) {
        throw ConfigError("scenario: negative horizon");
    }
    if (outflow_density.size() != components.size()) {
        throw ConfigError("scenario: one outflow density signal per component");
    }
    if (!(physics.theta >= 0.0) || !(physics.omega_bar > 0.0)) {
        throw ConfigError("scenario: theta must be >= 0 and omega_bar > 0");
    }
}

namespace {

double interp_linear(const std::vector<double>& xs, const std::vector<double>& ys,
                     double x) {
    if (x <= xs.front()) return ys.front();
    if (x >= xs.back()) return ys.back();
    auto it = std::upper_bound(xs.begin(), xs.end(), x);
    const std::size_t j = (it - xs.begin()) - 1;
    const double w = (x - xs[j]) / (xs[j + 1] - xs[j]);
    return (1.0 - w) * ys[j] + w * ys[j + 1];
}

// Deterministic uniform draw in [-1, 1); identical on every platform.
double noise_draw(std::mt19937_64& rng) {
    return 2.0 * ((rng() >> 11) * 0x1.0p-53) - 1.0;
}

}  // namespace

MixtureState Scenario::initial_state() const {
    validate();
    const Grid grid{length, disc.cells};
    const int n = static_cast<int>(components.size());
    MixtureState s;

    if (initial.family == "uniform") {
        if (static_cast<int>(initial.density.size()) != n ||
            static_cast<int>(initial.velocity.size()) != n) {
            throw ConfigError("scenario: uniform initial data needs one "
                              "density and velocity per component");
        }
        s.grid = grid;
        s.laws = laws();
        for (int i = 0; i < n; ++i) {
            s.rho.emplace_back(grid.cells, initial.density[i]);
            s.v.emplace_back(grid.cells, initial.velocity[i]);
        }
    } else if (initial.family == "example1") {
        if (static_cast<int>(initial.density.size()) != n) {
            throw ConfigError("scenario: example1 initial data needs one "
                              "density per component");
        }
        s = example1_state(initial.density, laws(), initial.p0, physics.theta,
                           0.0, grid);
    } else if (initial.family == "example2") {
        TravelingWaveSpec spec;
        spec.lambda = initial.lambda;
        spec.amplitudes = initial.amplitudes;
        spec.theta = physics.theta;
        for (const auto& c : components) {
            if (c.kind != "isothermal_ideal") {
                throw ConfigError("scenario: the example2 family requires "
                                  "isothermal_ideal components");
            }
            spec.sound_speeds.push_back(c.sound_speed);
        }
        s = example2_state(spec, 0.0, grid);
    } else if (initial.family == "tabulated") {
        if (static_cast<int>(initial.density_profiles.size()) != n ||
            static_cast<int>(initial.velocity_profiles.size()) != n ||
            initial.x.size() < 2) {
            throw ConfigError("scenario: tabulated initial data needs x "
                              "samples plus one profile pair per component");
        }
        s.grid = grid;
        s.laws = laws();
        for (int i = 0; i < n; ++i) {
            if (initial.density_profiles[i].size() != initial.x.size() ||
                initial.velocity_profiles[i].size() != initial.x.size()) {
                throw ConfigError("scenario: profile length mismatch");
            }
            std::vector<double> rho(grid.cells), v(grid.cells);
            for (int k = 0; k < grid.cells; ++k) {
                rho[k] = interp_linear(initial.x, initial.density_profiles[i],
                                       grid.x(k));
                v[k] = interp_linear(initial.x, initial.velocity_profiles[i],
                                     grid.x(k));
            }
            s.rho.push_back(std::move(rho));
            s.v.push_back(std::move(v));
        }
    } else {
        throw ConfigError("scenario: unknown initial family '" +
                          initial.family + "'");
    }

    if (initial.perturbation > 0.0) {
        std::mt19937_64 rng(initial.seed);
        for (int i = 0; i < n; ++i) {
            for (int k = 0; k < grid.cells; ++k) {
                s.v[i][k] += initial.perturbation * noise_draw(rng);
            }
        }
    }
    s.validate();
    return s;
}

BoundaryConditions Scenario::boundary() const {
    validate();
    BoundaryConditions bc;
    bc.vbar = inflow_velocity.make();
    for (const auto& spec : outflow_density) {
        bc.rhobar.push_back(spec.make());
    }
    return bc;
}

namespace {

LawSpec parse_law(const toml_lite::Table& t) {
    LawSpec spec;
    spec.kind = t.text("law");
    if (spec.kind == "isothermal_ideal") {
        spec.sound_speed = t.number("sound_speed_m_per_s");
    } else if (spec.kind == "isentropic") {
        spec.coeff = t.number("coeff");
        spec.gamma = t.number("gamma");
    } else if (spec.kind == "tabulated") {
        spec.table_rho = t.numbers("rho_kg_per_m3");
        spec.table_p = t.numbers("p_pa");
    } else {
        throw ConfigError("scenario: unknown pressure law '" + spec.kind + "'");
    }
    return spec;
}

SignalSpec parse_signal(const toml_lite::Table& t, const std::string& unit) {
    SignalSpec spec;
    spec.kind = t.text("kind");
    if (spec.kind == "constant") {
        spec.value = t.number("value_" + unit);
    } else if (spec.kind == "ramp") {
        spec.start = t.number("start_" + unit);
        spec.rate = t.number("rate_" + unit + "_per_s");
    } else if (spec.kind == "sinusoid") {
        spec.mean = t.number("mean_" + unit);
        spec.amplitude = t.number("amplitude_" + unit);
        spec.frequency = t.number("frequency_hz");
        spec.phase = t.number_or("phase_rad", 0.0);
    } else if (spec.kind == "table") {
        spec.t = t.numbers("t_s");
        spec.values = t.numbers("value_" + unit);
    } else {
        throw ConfigError("scenario: unknown signal kind '" + spec.kind + "'");
    }
    return spec;
}

}  // namespace

Scenario parse_scenario(const std::string& toml_text) {
    const auto root = toml_lite::parse(toml_text);
    Scenario sc;

    const auto* physics = root.find_table("physics");
    if (!physics) throw ConfigError("scenario: missing [physics]");
    sc.physics.theta = physics->number("theta_per_m");
    sc.physics.omega_bar = physics->number("omega_bar_per_s");

    const auto* geometry = root.find_table("geometry");
    if (!geometry) throw ConfigError("scenario: missing [geometry]");
    sc.length = geometry->number("length_m");

    const auto* grid = root.find_table("grid");
    if (!grid) throw ConfigError("scenario: missing [grid]");
    sc.disc.cells = static_cast<int>(grid->integer("cells"));
    sc.disc.cfl = grid->number_or("cfl", 0.9);

    const auto* horizon = root.find_table("horizon");
    if (!horizon) throw ConfigError("scenario: missing [horizon]");
    sc.disc.t_end = horizon->number("t_end_s");
    sc.disc.output_stride =
        static_cast<int>(horizon->integer_or("output_stride", 1));

    const auto* comps = root.find_array("component");
    if (!comps || comps->empty()) {
        throw ConfigError("scenario: at least one [[component]] required");
    }
    for (const auto& c : *comps) sc.components.push_back(parse_law(c));

    const auto* init = root.find_table("initial");
    if (!init) throw ConfigError("scenario: missing [initial]");
    sc.initial.family = init->text_or("family", "uniform");
    if (const auto* v = init->find("density_kg_per_m3")) {
        sc.initial.density = v->as_doubles();
    }
    if (const auto* v = init->find("velocity_m_per_s")) {
        sc.initial.velocity = v->as_doubles();
    }
    sc.initial.p0 = init->number_or("p0", 1.0);
    sc.initial.lambda = init->number_or("lambda_m_per_s", 1.0);
    if (const auto* v = init->find("amplitudes_kg_per_m3")) {
        sc.initial.amplitudes = v->as_doubles();
    }
    if (const auto* v = init->find("x_m")) {
        sc.initial.x = v->as_doubles();
    }
    for (std::size_t i = 1; i <= sc.components.size(); ++i) {
        const std::string rk = "density_" + std::to_string(i) + "_kg_per_m3";
        const std::string vk = "velocity_" + std::to_string(i) + "_m_per_s";
        if (const auto* v = init->find(rk)) {
            sc.initial.density_profiles.push_back(v->as_doubles());
        }
        if (const auto* v = init->find(vk)) {
            sc.initial.velocity_profiles.push_back(v->as_doubles());
        }
    }
    sc.initial.perturbation = init->number_or("perturbation_m_per_s", 0.0);
    sc.initial.seed =
        static_cast<std::uint64_t>(init->integer_or("seed", 0));

    const auto* inflow = root.find_table("boundary.inflow_velocity");
    if (!inflow) {
        throw ConfigError("scenario: missing [boundary.inflow_velocity]");
    }
    sc.inflow_velocity = parse_signal(*inflow, "m_per_s");

    const auto* bnd = root.find_table("boundary");
    const auto* outflow = bnd ? bnd->find_array("outflow_density") : nullptr;
    if (!outflow || outflow->size() != sc.components.size()) {
        throw ConfigError("scenario: one [[boundary.outflow_density]] per "
                          "component required");
    }
    for (const auto& t : *outflow) {
        sc.outflow_density.push_back(parse_signal(t, "kg_per_m3"));
    }

    if (const auto* output = root.find_table("output")) {
        if (const auto* v = output->find("snapshot_times_s")) {
            sc.snapshot_times = v->as_doubles();
        }
    }
    if (const auto* stat = root.find_table("stationary")) {
        if (const auto* v = stat->find("flow_rates_kg_per_m2_s")) {
            sc.stationary_flow_rates = v->as_doubles();
        }
        sc.stationary_match_outlet = stat->flag_or("match_outlet", false);
    }

    sc.validate();
    return sc;
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("scenario: cannot open '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario(buf.str());
}

namespace {

using toml_lite::format_double;

void write_array(std::ostream& os, const std::string& key,
                 const std::vector<double>& xs) {
    os << key << " = [";
    for (std::size_t j = 0; j < xs.size(); ++j) {
        if (j) os << ", ";
        os << format_double(xs[j]);
    }
    os << "]\n";
}

void write_signal(std::ostream& os, const SignalSpec& s,
                  const std::string& unit) {
    os << "kind = \"" << s.kind << "\"\n";
    if (s.kind == "constant") {
        os << "value_" << unit << " = " << format_double(s.value) << "\n";
    } else if (s.kind == "ramp") {
        os << "start_" << unit << " = " << format_double(s.start) << "\n";
        os << "rate_" << unit << "_per_s = " << format_double(s.rate) << "\n";
    } else if (s.kind == "sinusoid") {
        os << "mean_" << unit << " = " << format_double(s.mean) << "\n";
        os << "amplitude_" << unit << " = " << format_double(s.amplitude)
           << "\n";
        os << "frequency_hz = " << format_double(s.frequency) << "\n";
        os << "phase_rad = " << format_double(s.phase) << "\n";
    } else if (s.kind == "table") {
        write_array(os, "t_s", s.t);
        write_array(os, "value_" + unit, s.values);
    }
}

}  // namespace

std::string serialize_scenario(const Scenario& sc) {
    std::ostringstream os;
    os << "[physics]\n";
    os << "theta_per_m = " << format_double(sc.physics.theta) << "\n";
    os << "omega_bar_per_s = " << format_double(sc.physics.omega_bar) << "\n\n";

    os << "[geometry]\n";
    os << "length_m = " << format_double(sc.length) << "\n\n";

    os << "[grid]\n";
    os << "cells = " << sc.disc.cells << "\n";
    os << "cfl = " << format_double(sc.disc.cfl) << "\n\n";

    os << "[horizon]\n";
    os << "t_end_s = " << format_double(sc.disc.t_end) << "\n";
    os << "output_stride = " << sc.disc.output_stride << "\n\n";

    for (const auto& c : sc.components) {
        os << "[[component]]\n";
        os << "law = \"" << c.kind << "\"\n";
        if (c.kind == "isothermal_ideal") {
            os << "sound_speed_m_per_s = " << format_double(c.sound_speed)
               << "\n";
        } else if (c.kind == "isentropic") {
            os << "coeff = " << format_double(c.coeff) << "\n";
            os << "gamma = " << format_double(c.gamma) << "\n";
        } else if (c.kind == "tabulated") {
            write_array(os, "rho_kg_per_m3", c.table_rho);
            write_array(os, "p_pa", c.table_p);
        }
        os << "\n";
    }

    os << "[initial]\n";
    os << "family = \"" << sc.initial.family << "\"\n";
    if (!sc.initial.density.empty()) {
        write_array(os, "density_kg_per_m3", sc.initial.density);
    }
    if (!sc.initial.velocity.empty()) {
        write_array(os, "velocity_m_per_s", sc.initial.velocity);
    }
    if (sc.initial.family == "example1") {
        os << "p0 = " << format_double(sc.initial.p0) << "\n";
    }
    if (sc.initial.family == "example2") {
        os << "lambda_m_per_s = " << format_double(sc.initial.lambda) << "\n";
        write_array(os, "amplitudes_kg_per_m3", sc.initial.amplitudes);
    }
    if (sc.initial.family == "tabulated") {
        write_array(os, "x_m", sc.initial.x);
        for (std::size_t i = 0; i < sc.initial.density_profiles.size(); ++i) {
            write_array(os, "density_" + std::to_string(i + 1) + "_kg_per_m3",
                        sc.initial.density_profiles[i]);
        }
        for (std::size_t i = 0; i < sc.initial.velocity_profiles.size(); ++i) {
            write_array(os, "velocity_" + std::to_string(i + 1) + "_m_per_s",
                        sc.initial.velocity_profiles[i]);
        }
    }
    if (sc.initial.perturbation > 0.0) {
        os << "perturbation_m_per_s = " << format_double(sc.initial.perturbation)
           << "\n";
        os << "seed = " << sc.initial.seed << "\n";
    }
    os << "\n[boundary.inflow_velocity]\n";
    write_signal(os, sc.inflow_velocity, "m_per_s");
    for (const auto& s : sc.outflow_density) {
        os << "\n[[boundary.outflow_density]]\n";
        write_signal(os, s, "kg_per_m3");
    }
    if (!sc.snapshot_times.empty()) {
        os << "\n[output]\n";
        write_array(os, "snapshot_times_s", sc.snapshot_times);
    }
    if (!sc.stationary_flow_rates.empty() || sc.stationary_match_outlet) {
        os << "\n[stationary]\n";
        if (!sc.stationary_flow_rates.empty()) {
            write_array(os, "flow_rates_kg_per_m2_s", sc.stationary_flow_rates);
        }
        if (sc.stationary_match_outlet) {
            os << "match_outlet = true\n";
        }
    }
    return os.str();
}

Trajectory run(const Scenario& sc) {
    return run(sc.initial_state(), sc.boundary(), sc.physics, sc.disc,
               sc.snapshot_times);
}

ComparisonReport compare_models(const Scenario& sc, double omega_bar) {
    PhysicsParams p = sc.physics;
    p.omega_bar = omega_bar;
    return compare_models(sc.initial_state(), sc.boundary(), p, sc.disc);
}

}  // namespace blendflow
