#include "cylosc/commands.hpp"

#include <cmath>
#include <ostream>
#include <vector>

#include "cylosc/classical.hpp"
#include "cylosc/jumps.hpp"
#include "cylosc/states.hpp"

namespace cylosc {

namespace {

// Writes comma-separated values with full double precision.
class CsvWriter {
public:
    explicit CsvWriter(std::ostream& out) : out_(out)
    {
        out_.precision(17);
    }

    void header(const char* line) { out_ << line << '\n'; }

    template <class... Ts>
    void row(const Ts&... fields)
    {
        const char* sep = "";
        ((out_ << sep << fields, sep = ","), ...);
        out_ << '\n';
    }

private:
    std::ostream& out_;
};

void check(bool ok, const std::string& message)
{
    if (!ok)
        throw ArgumentError(message);
}

CoherentParams coherent(const RunConfig& cfg)
{
    return {cfg.J, cfg.alpha, cfg.q, cfg.p};
}

Tolerance tolerance(const RunConfig& cfg)
{
    Tolerance tol;
    tol.abs_tol = cfg.tol;
    return tol;
}

std::vector<double> time_grid(const RunConfig& cfg)
{
    const auto steps = static_cast<std::size_t>(std::floor(cfg.t_max / cfg.dt + 1e-9));
    std::vector<double> t(steps + 1);
    for (std::size_t i = 0; i < t.size(); ++i)
        t[i] = static_cast<double>(i) * cfg.dt;
    return t;
}

}  // namespace

void validate(const RunConfig& cfg)
{
    for (double x : {cfg.omega, cfg.alpha, cfg.J, cfg.q, cfg.p, cfg.t, cfg.t_max, cfg.dt, cfg.eps, cfg.tol})
        check(std::isfinite(x), "all numeric parameters must be finite");
    check(cfg.omega >= OscillatorConfig::kMinOmega, "--omega must be at least 1e-6");
    check(cfg.tol > 0.0, "--tol must be positive");
    check(cfg.dt > 0.0, "--dt must be positive");
    check(cfg.t_max >= 0.0, "--t-max must be non-negative");
    check(cfg.eps > 0.0, "--eps must be positive");
    check(cfg.k_max >= cfg.k_min, "--k-max must not be below --k-min");
    check(cfg.grid_phi >= 2 && cfg.grid_l >= 2, "grid sizes must be at least 2");
    if (cfg.l_min)
        check(std::isfinite(*cfg.l_min), "--l-min must be finite");
    if (cfg.l_max)
        check(std::isfinite(*cfg.l_max), "--l-max must be finite");
    if (cfg.l_min && cfg.l_max)
        check(*cfg.l_max > *cfg.l_min, "--l-max must exceed --l-min");
}

void write_density_csv(const RunConfig& cfg, std::ostream& out)
{
    validate(cfg);
    const CoherentParams params = coherent(cfg);
    const OscillatorConfig osc(cfg.omega);
    const auto [lo, hi] = default_l_range(params, osc);
    const double l_min = cfg.l_min.value_or(lo);
    const double l_max = cfg.l_max.value_or(hi);
    check(l_max > l_min, "l range is empty");

    const DensityGrid grid = density_grid(params, osc, cfg.t, uniform_phi_grid(static_cast<std::size_t>(cfg.grid_phi)),
                                          uniform_grid(l_min, l_max, static_cast<std::size_t>(cfg.grid_l)),
                                          tolerance(cfg));
    CsvWriter csv(out);
    csv.header("t,phi,l,p");
    for (std::size_t i = 0; i < grid.phi_values.size(); ++i)
        for (std::size_t j = 0; j < grid.l_values.size(); ++j)
            csv.row(cfg.t, grid.phi_values[i], grid.l_values[j], grid.at(i, j));
}

void write_trajectory_csv(const RunConfig& cfg, std::ostream& out)
{
    validate(cfg);
    const auto t = time_grid(cfg);
    const auto samples = mean_trajectory(coherent(cfg), OscillatorConfig(cfg.omega), t, tolerance(cfg));
    CsvWriter csv(out);
    csv.header("t,phi,l,absU");
    for (const auto& s : samples)
        csv.row(s.t, s.phi, s.l, s.abs_U);
}

void write_jumps_csv(const RunConfig& cfg, std::ostream& out)
{
    validate(cfg);
    const JumpCloud cloud =
        jump_points(coherent(cfg), OscillatorConfig(cfg.omega), cfg.k_min, cfg.k_max, cfg.eps, tolerance(cfg));
    CsvWriter csv(out);
    csv.header("k,t_star,phi_minus,phi_plus,l,delta_phi");
    for (const auto& p : cloud.points)
        csv.row(p.k, p.t_star, p.phi_minus, p.phi_plus, p.l, p.delta_phi);
}

void write_classical_csv(const RunConfig& cfg, std::ostream& out)
{
    validate(cfg);
    const ClassicalInitial init{cfg.alpha, cfg.J, cfg.q, cfg.p};
    const OscillatorConfig osc(cfg.omega);
    CsvWriter csv(out);
    csv.header("t,phi,l,p_l,energy");
    for (double t : time_grid(cfg)) {
        const ClassicalSample s = classical_solution(init, osc, t);
        csv.row(s.t, s.phi, s.l, s.p_l, s.energy);
    }
}

}  // namespace cylosc
