#pragma once

#include <numbers>
#include <ostream>
#include <string>
#include <vector>

#include "spinboost/states.hpp"

namespace spinboost::sweep {

struct SweepConfig {
    states::BellMixture mixture{{0.7, 0.1, 0.1, 0.1}};
    double xi = 0.5 * std::numbers::pi;
    double tau = 0.5 * std::numbers::pi;
    double theta = 0.5 * std::numbers::pi;
    double energy_ratio = 2.0;
    double beta_start = 0.0;
    double beta_end = 0.9;
    std::size_t steps = 50;
    std::string output_path;
    bool write_svg = false;
};

struct SweepRow {
    double beta, alpha, omega1, omega2, phi, omega_sum;
    double c_rest, c_boosted, eof_rest, eof_boosted, s_spin_rest, s_spin_boosted;
};

// One row per beta in [start, end], opposite momenta at the configured theta
// and energy ratio, spin orientation (xi, tau).
std::vector<SweepRow> run_sweep(const SweepConfig& config);

// CSV with shortest round-trip decimal formatting; byte-stable per build.
void write_csv(const std::vector<SweepRow>& rows, std::ostream& out);

// Minimal line plot of c_boosted against beta: one polyline, labeled axes.
void write_svg(const std::vector<SweepRow>& rows, std::ostream& out);

// Writes the CSV (and the SVG next to it when configured, extension .svg).
// Returns the paths written; throws on I/O failure.
std::vector<std::string> write_outputs(const SweepConfig& config);

std::string svg_path_for(const std::string& csv_path);

}  // namespace spinboost::sweep
