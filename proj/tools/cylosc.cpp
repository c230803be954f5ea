// cylosc: datasets for the harmonic oscillator on a cylinder.
//
//   cylosc density    [options]   probability density on a (phi, l) grid at time t
//   cylosc trajectory [options]   Arg <U(t)> and <l(t)> for t = 0, dt, ..., t-max
//   cylosc jumps      [options]   phase jumps at t* = (2k+1) pi, k = k-min..k-max
//   cylosc classical  [options]   classical trajectory with the same initial data
//
// Options may also be read from a key=value file given with --config;
// command-line flags take precedence. Exit codes: 0 success, 2 bad arguments,
// 1 numerical or I/O failure.

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "cylosc/commands.hpp"
#include "cylosc/theta.hpp"

namespace {

using Writer = std::function<void(const cylosc::RunConfig&, std::ostream&)>;

int run(const cylosc::RunConfig& cfg, const Writer& write)
{
    // Render fully before touching the output so a failed run leaves no partial file.
    std::ostringstream buffer;
    write(cfg, buffer);

    if (cfg.out_path == "-") {
        std::cout << buffer.str();
        return std::cout ? 0 : 1;
    }
    std::ofstream file(cfg.out_path, std::ios::binary);
    if (!file) {
        std::cerr << "error: cannot open " << cfg.out_path << " for writing\n";
        return 1;
    }
    file << buffer.str();
    file.close();
    if (!file) {
        std::cerr << "error: failed writing " << cfg.out_path << '\n';
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    cylosc::RunConfig cfg;
    double l_min = 0.0;
    double l_max = 0.0;

    CLI::App app{"Coherent-state dynamics of the harmonic oscillator on a cylinder"};
    app.set_config("--config", "", "key=value file with option defaults");
    app.fallthrough();
    app.require_subcommand(1);

    app.add_option("--omega", cfg.omega, "meridian oscillator frequency")->capture_default_str();
    app.add_option("--alpha", cfg.alpha, "classical angle of the coherent state [rad]")->capture_default_str();
    app.add_option("--J", cfg.J, "classical angular momentum")->capture_default_str();
    app.add_option("--q", cfg.q, "meridian position")->capture_default_str();
    app.add_option("--p", cfg.p, "meridian momentum")->capture_default_str();
    app.add_option("--tol", cfg.tol, "absolute theta truncation tolerance")->capture_default_str();
    app.add_option("--t", cfg.t, "time of the density snapshot")->capture_default_str();
    app.add_option("--t-max", cfg.t_max, "last sample time")->capture_default_str();
    app.add_option("--dt", cfg.dt, "sampling step")->capture_default_str();
    app.add_option("--k-min", cfg.k_min, "first jump index")->capture_default_str();
    app.add_option("--k-max", cfg.k_max, "last jump index")->capture_default_str();
    app.add_option("--eps", cfg.eps, "offset of the one-sided phase limits")->capture_default_str();
    app.add_option("--grid-phi", cfg.grid_phi, "number of phi grid points")->capture_default_str();
    app.add_option("--grid-l", cfg.grid_l, "number of l grid points")->capture_default_str();
    auto* l_min_opt = app.add_option("--l-min", l_min, "lower end of the l grid");
    auto* l_max_opt = app.add_option("--l-max", l_max, "upper end of the l grid");
    app.add_option("--out", cfg.out_path, "output CSV path, - for stdout")->capture_default_str();

    const std::map<std::string, Writer> writers{
        {"density", cylosc::write_density_csv},
        {"trajectory", cylosc::write_trajectory_csv},
        {"jumps", cylosc::write_jumps_csv},
        {"classical", cylosc::write_classical_csv},
    };
    app.add_subcommand("density", "probability density on a (phi, l) grid at time t");
    app.add_subcommand("trajectory", "mean trajectory (Arg <U(t)>, <l(t)>)");
    app.add_subcommand("jumps", "phase jump points at t* = (2k+1) pi");
    app.add_subcommand("classical", "classical trajectory and energy");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (l_min_opt->count() > 0)
        cfg.l_min = l_min;
    if (l_max_opt->count() > 0)
        cfg.l_max = l_max;

    const std::string command = app.get_subcommands().front()->get_name();
    try {
        cylosc::validate(cfg);
        return run(cfg, writers.at(command));
    } catch (const cylosc::ArgumentError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
