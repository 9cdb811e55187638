#include "spinboost/sweep.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <stdexcept>
#include <system_error>

#include "spinboost/entanglement.hpp"
#include "spinboost/kinematics.hpp"

namespace spinboost::sweep {

namespace {

std::string shortest(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

void validate(const SweepConfig& c) {
    if (!(c.beta_start >= 0.0) || !(c.beta_end >= c.beta_start) || !(c.beta_end < 1.0))
        throw std::domain_error("beta range must satisfy 0 <= start <= end < 1");
    if (c.steps < 2) throw std::domain_error("sweep needs at least 2 steps");
}

}  // namespace

std::vector<SweepRow> run_sweep(const SweepConfig& config) {
    validate(config);

    const states::SpinOrientation spin{config.xi, config.tau};
    const auto geom = states::TwoMomentumGeometry::antiparallel(config.energy_ratio, config.theta);
    const auto rho = states::bd_density(config.mixture, spin);
    const double phi = config.xi - config.theta;

    const double c_rest = entanglement::bd_rest_concurrence(config.mixture);
    const double eof_rest = entanglement::entanglement_of_formation(c_rest);
    const double s_spin_rest =
        entanglement::von_neumann_entropy(linalg::partial_trace_first(rho));

    std::vector<SweepRow> rows;
    rows.reserve(config.steps);
    for (std::size_t i = 0; i < config.steps; ++i) {
        const double beta =
            config.beta_start + (config.beta_end - config.beta_start) * static_cast<double>(i) /
                                    static_cast<double>(config.steps - 1);
        const auto boost = kinematics::BoostParameters::x_boost(beta);
        const auto w1 = kinematics::wigner_rotation(boost, geom.k1);
        const auto w2 = kinematics::wigner_rotation(boost, geom.k2);

        SweepRow row{};
        row.beta = beta;
        row.alpha = boost.alpha;
        row.omega1 = w1.omega;
        row.omega2 = w2.omega;
        row.phi = phi;
        row.omega_sum = w1.omega + w2.omega;
        row.c_rest = c_rest;
        row.c_boosted =
            entanglement::bd_boosted_concurrence_closed_form(config.mixture, phi, row.omega_sum)
                .concurrence;
        row.eof_rest = eof_rest;
        row.eof_boosted = entanglement::entanglement_of_formation(row.c_boosted);
        row.s_spin_rest = s_spin_rest;
        row.s_spin_boosted = entanglement::von_neumann_entropy(
            linalg::partial_trace_first(states::boost_density(rho, boost, geom)));
        rows.push_back(row);
    }
    return rows;
}

void write_csv(const std::vector<SweepRow>& rows, std::ostream& out) {
    out << "beta,alpha,omega1,omega2,phi,omega_sum,C_rest,C_boosted,"
           "EoF_rest,EoF_boosted,S_spin_rest,S_spin_boosted\n";
    for (const auto& r : rows) {
        out << shortest(r.beta) << ',' << shortest(r.alpha) << ',' << shortest(r.omega1) << ','
            << shortest(r.omega2) << ',' << shortest(r.phi) << ',' << shortest(r.omega_sum) << ','
            << shortest(r.c_rest) << ',' << shortest(r.c_boosted) << ',' << shortest(r.eof_rest)
            << ',' << shortest(r.eof_boosted) << ',' << shortest(r.s_spin_rest) << ','
            << shortest(r.s_spin_boosted) << '\n';
    }
}

void write_svg(const std::vector<SweepRow>& rows, std::ostream& out) {
    const double width = 640.0, height = 480.0;
    const double left = 70.0, right = 20.0, top = 20.0, bottom = 50.0;
    const double plot_w = width - left - right;
    const double plot_h = height - top - bottom;

    double x_lo = rows.empty() ? 0.0 : rows.front().beta;
    double x_hi = rows.empty() ? 1.0 : rows.back().beta;
    if (!(x_hi > x_lo)) x_hi = x_lo + 1.0;

    auto x_of = [&](double beta) { return left + plot_w * (beta - x_lo) / (x_hi - x_lo); };
    auto y_of = [&](double c) { return top + plot_h * (1.0 - c); };  // C in [0, 1]

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << shortest(width)
        << "\" height=\"" << shortest(height) << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<line x1=\"" << shortest(left) << "\" y1=\"" << shortest(top + plot_h) << "\" x2=\""
        << shortest(left + plot_w) << "\" y2=\"" << shortest(top + plot_h)
        << "\" stroke=\"black\"/>\n";
    out << "<line x1=\"" << shortest(left) << "\" y1=\"" << shortest(top) << "\" x2=\""
        << shortest(left) << "\" y2=\"" << shortest(top + plot_h) << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << shortest(left + 0.5 * plot_w) << "\" y=\"" << shortest(height - 12.0)
        << "\" text-anchor=\"middle\" font-size=\"14\">beta</text>\n";
    out << "<text x=\"18\" y=\"" << shortest(top + 0.5 * plot_h)
        << "\" text-anchor=\"middle\" font-size=\"14\" transform=\"rotate(-90 18 "
        << shortest(top + 0.5 * plot_h) << ")\">C_boosted</text>\n";
    out << "<text x=\"" << shortest(left - 8.0) << "\" y=\"" << shortest(top + plot_h + 4.0)
        << "\" text-anchor=\"end\" font-size=\"12\">" << shortest(x_lo) << "</text>\n";
    out << "<text x=\"" << shortest(left + plot_w) << "\" y=\"" << shortest(top + plot_h + 16.0)
        << "\" text-anchor=\"middle\" font-size=\"12\">" << shortest(x_hi) << "</text>\n";
    out << "<text x=\"" << shortest(left - 8.0) << "\" y=\"" << shortest(top + 4.0)
        << "\" text-anchor=\"end\" font-size=\"12\">1</text>\n";

    out << "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i) out << ' ';
        out << shortest(x_of(rows[i].beta)) << ',' << shortest(y_of(rows[i].c_boosted));
    }
    out << "\"/>\n</svg>\n";
}

std::string svg_path_for(const std::string& csv_path) {
    if (csv_path.size() >= 4 && csv_path.compare(csv_path.size() - 4, 4, ".csv") == 0)
        return csv_path.substr(0, csv_path.size() - 4) + ".svg";
    return csv_path + ".svg";
}

std::vector<std::string> write_outputs(const SweepConfig& config) {
    if (config.output_path.empty()) throw std::domain_error("sweep needs an output path");
    const auto rows = run_sweep(config);

    std::vector<std::string> written;
    {
        std::ofstream out(config.output_path, std::ios::binary);
        if (!out) throw std::system_error(errno, std::generic_category(),
                                          "cannot open " + config.output_path);
        write_csv(rows, out);
        if (!out) throw std::system_error(EIO, std::generic_category(),
                                          "write failed for " + config.output_path);
        written.push_back(config.output_path);
    }
    if (config.write_svg) {
        const std::string path = svg_path_for(config.output_path);
        std::ofstream out(path, std::ios::binary);
        if (!out) throw std::system_error(errno, std::generic_category(), "cannot open " + path);
        write_svg(rows, out);
        if (!out) throw std::system_error(EIO, std::generic_category(), "write failed for " + path);
        written.push_back(path);
    }
    return written;
}

}  // namespace spinboost::sweep
