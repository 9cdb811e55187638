#include <cmath>
#include <cstdio>
#include <iostream>
#include <numbers>
#include <stdexcept>
#include <string>
#include <system_error>
#include <vector>

#include "CLI11.hpp"

#include "spinboost/entanglement.hpp"
#include "spinboost/gates.hpp"
#include "spinboost/kinematics.hpp"
#include "spinboost/linalg.hpp"
#include "spinboost/states.hpp"
#include "spinboost/sweep.hpp"
#include "spinboost/verify.hpp"

namespace {

constexpr double kPi = std::numbers::pi;

std::string num(double v, int precision) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", precision, v);
    return buf;
}

std::string cpx(spinboost::linalg::Complex z, int precision) {
    if (z.imag() == 0.0) return num(z.real(), precision);
    char buf[160];
    std::snprintf(buf, sizeof buf, "%.*g%+.*gi", precision, z.real(), precision, z.imag());
    return buf;
}

std::string ket_line(const spinboost::linalg::ComplexMatrix& v, int precision) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.rows(); ++i) {
        if (i) s += ", ";
        s += cpx(v(i, 0), precision);
    }
    return s + ")";
}

double to_radians(double angle, bool degrees) { return degrees ? angle * kPi / 180.0 : angle; }

struct BetaRange {
    double start = 0.0;
    double end = 0.9;
    std::size_t steps = 50;
};

BetaRange parse_beta_range(const std::string& text) {
    BetaRange r;
    const auto first = text.find(':');
    const auto second = text.find(':', first == std::string::npos ? first : first + 1);
    if (first == std::string::npos || second == std::string::npos)
        throw std::domain_error("--beta-range expects start:end:steps");
    try {
        std::size_t pos = 0;
        r.start = std::stod(text.substr(0, first), &pos);
        r.end = std::stod(text.substr(first + 1, second - first - 1), &pos);
        const long steps = std::stol(text.substr(second + 1), &pos);
        if (steps < 2) throw std::domain_error("steps must be >= 2");
        r.steps = static_cast<std::size_t>(steps);
    } catch (const std::domain_error&) {
        throw;
    } catch (const std::exception&) {
        throw std::domain_error("--beta-range expects numeric start:end:steps");
    }
    return r;
}

std::array<double, 4> parse_weights(const std::string& text) {
    std::array<double, 4> p{};
    std::size_t begin = 0;
    for (std::size_t i = 0; i < 4; ++i) {
        const auto comma = text.find(',', begin);
        const bool last = (i == 3);
        if ((comma == std::string::npos) != last)
            throw std::domain_error("--p expects four comma-separated weights");
        const std::string part = text.substr(begin, last ? std::string::npos : comma - begin);
        try {
            p[i] = std::stod(part);
        } catch (const std::exception&) {
            throw std::domain_error("--p expects four comma-separated weights");
        }
        begin = comma + 1;
    }
    return p;
}

int run_wigner(double beta, double energy_ratio, double theta, int precision) {
    const auto boost = spinboost::kinematics::BoostParameters::x_boost(beta);
    const auto particle = spinboost::kinematics::ParticleKinematics::in_yz_plane(energy_ratio, theta);
    const auto w = spinboost::kinematics::wigner_rotation(boost, particle);
    const auto u = spinboost::kinematics::wigner_unitary(w);

    std::cout << "wigner rotation report\n";
    std::cout << "beta          " << num(beta, precision) << "\n";
    std::cout << "alpha         " << num(boost.alpha, precision) << "\n";
    std::cout << "E/m           " << num(energy_ratio, precision) << "\n";
    std::cout << "delta         " << num(particle.delta, precision) << "\n";
    std::cout << "theta         " << num(theta, precision) << "\n";
    std::cout << "omega         " << num(w.omega, precision) << "\n";
    std::cout << "cos(omega/2)  " << num(w.cos_half, precision) << "\n";
    std::cout << "sin(omega/2)  " << num(w.sin_half, precision) << "\n";
    std::cout << "axis          (" << num(w.axis[0], precision) << ", " << num(w.axis[1], precision)
              << ", " << num(w.axis[2], precision) << ")\n";
    std::cout << "U row 1       (" << cpx(u(0, 0), precision) << ", " << cpx(u(0, 1), precision)
              << ")\n";
    std::cout << "U row 2       (" << cpx(u(1, 0), precision) << ", " << cpx(u(1, 1), precision)
              << ")\n";
    return 0;
}

int run_gate_demo(int precision) {
    const auto gate = spinboost::gates::cnot_limit_gate();
    std::cout << "controlled gate (omega1=0, omega2=pi limit)\n";
    for (std::size_t r = 0; r < 4; ++r) {
        std::cout << "  (";
        for (std::size_t c = 0; c < 4; ++c) {
            if (c) std::cout << ", ";
            std::cout << cpx(gate.matrix(r, c), precision);
        }
        std::cout << ")\n";
    }

    const auto entangle = spinboost::gates::demo_entangle();
    std::cout << "\nentangle demo\n";
    std::cout << "  input              " << ket_line(entangle.input, precision) << "\n";
    std::cout << "  output             " << ket_line(entangle.output, precision) << "\n";
    std::cout << "  concurrence before " << num(entangle.concurrence_before, precision) << "\n";
    std::cout << "  concurrence after  " << num(entangle.concurrence_after, precision) << "\n";

    const auto disentangle = spinboost::gates::demo_disentangle();
    std::cout << "\ndisentangle demo\n";
    std::cout << "  input              " << ket_line(disentangle.input, precision) << "\n";
    std::cout << "  output             " << ket_line(disentangle.output, precision) << "\n";
    std::cout << "  concurrence before " << num(disentangle.concurrence_before, precision) << "\n";
    std::cout << "  concurrence after  " << num(disentangle.concurrence_after, precision) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"single-particle spin-momentum entanglement under Lorentz boosts"};
    app.require_subcommand(1);

    bool degrees = false;
    int precision = 12;
    app.add_flag("--degrees", degrees, "interpret angle arguments as degrees");
    app.add_option("--precision", precision, "significant digits in printed reports")
        ->check(CLI::Range(1, 17));

    auto* wigner = app.add_subcommand("wigner", "compute one Wigner rotation");
    wigner->fallthrough();
    double beta = 0.0, energy_ratio = 1.0, theta = 0.5 * kPi;
    wigner->add_option("--beta", beta, "boost speed, 0 <= beta < 1")->required();
    wigner->add_option("--energy-ratio", energy_ratio, "particle E/m, >= 1")->required();
    auto* wigner_theta_opt =
        wigner->add_option("--theta", theta, "momentum polar angle in the yz plane, default pi/2");

    auto* sweep_cmd = app.add_subcommand("sweep", "sweep beta, write CSV (and optional SVG)");
    sweep_cmd->fallthrough();
    std::string weights_text = "0.7,0.1,0.1,0.1";
    std::string range_text = "0:0.9:50";
    spinboost::sweep::SweepConfig config;
    double sweep_xi = 0.5 * kPi, sweep_tau = 0.5 * kPi, sweep_theta = 0.5 * kPi;
    sweep_cmd->add_option("--p", weights_text, "Bell weights P1,P2,P3,P4");
    auto* xi_opt = sweep_cmd->add_option("--xi", sweep_xi, "spin polar angle, default pi/2");
    auto* tau_opt = sweep_cmd->add_option("--tau", sweep_tau, "spin azimuth, default pi/2");
    auto* theta_opt =
        sweep_cmd->add_option("--theta", sweep_theta, "momentum polar angle, default pi/2");
    sweep_cmd->add_option("--energy-ratio", config.energy_ratio, "particle E/m, >= 1");
    sweep_cmd->add_option("--beta-range", range_text, "start:end:steps");
    sweep_cmd->add_option("--out", config.output_path, "CSV output path")->required();
    sweep_cmd->add_flag("--svg", config.write_svg, "also write an SVG plot of C_boosted");

    auto* verify_cmd = app.add_subcommand("verify", "run all invariant suites");
    verify_cmd->fallthrough();
    std::uint64_t seed = 42;
    std::size_t trials = 1000;
    verify_cmd->add_option("--seed", seed, "generator seed");
    verify_cmd->add_option("--trials", trials, "random draws per suite");

    auto* demo_cmd = app.add_subcommand("gate-demo", "print the control-gate demonstrations");
    demo_cmd->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (wigner->parsed()) {
            const double th =
                wigner_theta_opt->count() ? to_radians(theta, degrees) : theta;
            return run_wigner(beta, energy_ratio, th, precision);
        }
        if (sweep_cmd->parsed()) {
            config.mixture = spinboost::states::BellMixture(parse_weights(weights_text));
            config.xi = xi_opt->count() ? to_radians(sweep_xi, degrees) : sweep_xi;
            config.tau = tau_opt->count() ? to_radians(sweep_tau, degrees) : sweep_tau;
            config.theta = theta_opt->count() ? to_radians(sweep_theta, degrees) : sweep_theta;
            const BetaRange range = parse_beta_range(range_text);
            config.beta_start = range.start;
            config.beta_end = range.end;
            config.steps = range.steps;
            for (const auto& path : spinboost::sweep::write_outputs(config))
                std::cout << "wrote " << path << "\n";
            return 0;
        }
        if (verify_cmd->parsed()) {
            if (trials == 0) {
                std::cerr << "error: --trials must be >= 1\n";
                return 2;
            }
            const spinboost::verify::Options options{seed, trials};
            const auto results = spinboost::verify::run_all_suites(options);
            spinboost::verify::write_report(results, options, std::cout);
            return spinboost::verify::all_passed(results) ? 0 : 1;
        }
        return run_gate_demo(precision);
    } catch (const std::system_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
