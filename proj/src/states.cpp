#include "cylosc/states.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cylosc/angles.hpp"
#include "parallel.hpp"

namespace cylosc {

namespace {

constexpr complex kI{0.0, 1.0};

void require_finite(double x, const char* what)
{
    if (!std::isfinite(x))
        throw std::invalid_argument(std::string(what) + " must be finite");
}

complex angular_argument(const CoherentParams& params, double phi)
{
    return complex{phi - params.alpha(), -params.J()} / kTwoPi;
}

complex angular_theta(const CoherentParams& params, double phi, double t, const Tolerance& tol)
{
    return theta::theta3({angular_argument(params, phi), complex{-t, 1.0} / kTwoPi}, tol);
}

// Trapezoid weights along a (possibly non-uniform) axis.
std::vector<double> trapezoid_weights(const std::vector<double>& x)
{
    std::vector<double> w(x.size(), 0.0);
    for (std::size_t j = 0; j + 1 < x.size(); ++j) {
        const double h = 0.5 * (x[j + 1] - x[j]);
        w[j] += h;
        w[j + 1] += h;
    }
    return w;
}

}  // namespace

CoherentParams::CoherentParams(double J, double alpha, double q_pos, double p_mom)
    : J_(J), alpha_(alpha), q_pos_(q_pos), p_mom_(p_mom)
{
    require_finite(J, "J");
    require_finite(alpha, "alpha");
    require_finite(q_pos, "q");
    require_finite(p_mom, "p");
    alpha_ = wrap_two_pi(alpha);
}

OscillatorConfig::OscillatorConfig(double omega) : omega_(omega)
{
    require_finite(omega, "omega");
    if (omega < kMinOmega)
        throw std::invalid_argument("omega must be at least " + std::to_string(kMinOmega));
}

CylinderPoint::CylinderPoint(double phi, double l) : phi_(phi), l_(l)
{
    require_finite(phi, "phi");
    require_finite(l, "l");
    phi_ = wrap_two_pi(phi);
}

complex coherent_state(const CoherentParams& params, const OscillatorConfig& cfg, const CylinderPoint& at,
                       const Tolerance& tol)
{
    const double omega = cfg.omega();
    const double q = params.q_pos();
    const double p = params.p_mom();
    const double dl = at.l() - q;

    const complex angular = theta::theta3({angular_argument(params, at.phi()), complex{0.0, 1.0 / kTwoPi}}, tol);
    const complex meridian = std::exp(complex{-0.5 * omega * dl * dl, p * (at.l() - 0.5 * q)});
    return std::pow(omega / kPi, 0.25) * angular * meridian;
}

complex evolved_state(const CoherentParams& params, const OscillatorConfig& cfg, const CylinderPoint& at,
                      double t, const Tolerance& tol)
{
    require_finite(t, "t");
    const double omega = cfg.omega();
    const double q = params.q_pos();
    const double p = params.p_mom();
    const double l = at.l();
    const double wt = omega * t;
    const complex rot = std::polar(1.0, -wt);       // e^{-i omega t}
    const complex rot2 = std::polar(1.0, -2.0 * wt);  // e^{-2 i omega t}

    const complex exponent = -0.5 * omega * l * l
                             - 0.5 * omega * q * q * rot * std::cos(wt)
                             - kI / (2.0 * omega) * p * p * rot * std::sin(wt)
                             - 0.5 * kI * q * p * rot2
                             + omega * complex{q, p / omega} * rot * l;

    return std::pow(omega / kPi, 0.25) * angular_theta(params, at.phi(), t, tol) *
           std::polar(1.0, -0.5 * wt) * std::exp(exponent);
}

double norm_constant(double J, const Tolerance& tol)
{
    require_finite(J, "J");
    return theta::theta3({complex{0.0, J / kPi}, complex{0.0, 1.0 / kPi}}, tol).real();
}

double angular_density(const CoherentParams& params, double phi, double t, const Tolerance& tol)
{
    require_finite(phi, "phi");
    require_finite(t, "t");
    return std::norm(angular_theta(params, phi, t, tol)) / norm_constant(params.J(), tol);
}

double meridian_density(const CoherentParams& params, const OscillatorConfig& cfg, double l, double t)
{
    const double omega = cfg.omega();
    const double d = l - expectation_l(params, cfg, t);
    return std::sqrt(omega / kPi) * std::exp(-omega * d * d);
}

double density(const CoherentParams& params, const OscillatorConfig& cfg, const CylinderPoint& at, double t,
               const Tolerance& tol)
{
    return angular_density(params, at.phi(), t, tol) * meridian_density(params, cfg, at.l(), t);
}

complex expectation_U(const CoherentParams& params, double t, const Tolerance& tol)
{
    require_finite(t, "t");
    const double J = params.J();
    const complex numerator = theta::theta2({complex{t / kTwoPi, -J / kPi}, complex{0.0, 1.0 / kPi}}, tol);
    return std::exp(-0.25) * std::polar(1.0, params.alpha()) * numerator / norm_constant(J, tol);
}

double expectation_l(const CoherentParams& params, const OscillatorConfig& cfg, double t)
{
    const double omega = cfg.omega();
    return params.q_pos() * std::cos(omega * t) + params.p_mom() / omega * std::sin(omega * t);
}

// ---------------------------------------------------------------------------
// Fourier oracle

int default_cutoff(double J)
{
    return static_cast<int>(std::ceil(std::abs(J))) + 12;
}

FourierGaussianState fourier_coefficients(const CoherentParams& params, const OscillatorConfig& cfg, int n_max,
                                          double rel_tol)
{
    if (n_max < 1)
        throw CutoffTooSmall("fourier_coefficients: n_max must be positive");

    FourierGaussianState state;
    state.n_max = n_max;
    state.coeffs.reserve(static_cast<std::size_t>(2 * n_max + 1));
    const double J = params.J();
    double largest = 0.0;
    for (int n = -n_max; n <= n_max; ++n) {
        const double magnitude = std::exp(-0.5 * n * n + n * J);
        largest = std::max(largest, magnitude);
        state.coeffs.push_back(std::polar(magnitude, -n * params.alpha()));
    }
    const double tail = std::max(std::abs(state.coeffs.front()), std::abs(state.coeffs.back()));
    if (tail > rel_tol * largest)
        throw CutoffTooSmall("fourier_coefficients: cutoff " + std::to_string(n_max) + " too small for J = " +
                             std::to_string(J));

    const double omega = cfg.omega();
    state.gauss_center = params.q_pos();
    state.gauss_width = 1.0 / std::sqrt(omega);
    state.gauss_momentum = params.p_mom();
    state.gauss_z = std::sqrt(omega / 2.0) * complex{params.q_pos(), params.p_mom() / omega};
    return state;
}

namespace {

void check_width(const FourierGaussianState& state, const OscillatorConfig& cfg)
{
    if (std::abs(state.gauss_width * std::sqrt(cfg.omega()) - 1.0) > 1e-12)
        throw std::invalid_argument("oracle: state was built for a different omega");
}

struct Amplitude {
    complex value;
    double norm_sq;
};

Amplitude angular_oracle(const FourierGaussianState& state, double phi, double t)
{
    complex sum{0.0, 0.0};
    double norm_sq = 0.0;
    for (int n = -state.n_max; n <= state.n_max; ++n) {
        const complex c = state.coeff(n);
        sum += c * std::polar(1.0, n * phi - 0.5 * t * n * n);
        norm_sq += std::norm(c);
    }
    return {sum, norm_sq};
}

// Coherent state of the meridian oscillator expanded in number states,
// exp(-|z|^2/2) SUM z^n / sqrt(n!) psi_n(l), each evolving with exp(-i omega (n + 1/2) t).
Amplitude meridian_oracle(const FourierGaussianState& state, double omega, double l, double t)
{
    const complex z = state.gauss_z;
    const double r = std::abs(z);
    const int n_osc = static_cast<int>(std::ceil(r * r + 12.0 * r + 40.0));
    const double x = std::sqrt(omega) * l;

    double psi_prev = 0.0;
    double psi = std::pow(omega / kPi, 0.25) * std::exp(-0.5 * x * x);
    complex a = std::exp(-0.5 * r * r);

    complex sum{0.0, 0.0};
    double norm_sq = 0.0;
    for (int n = 0; n <= n_osc; ++n) {
        sum += a * std::polar(1.0, -omega * (n + 0.5) * t) * psi;
        norm_sq += std::norm(a);

        const double psi_next = std::sqrt(2.0 / (n + 1)) * x * psi - std::sqrt(static_cast<double>(n) / (n + 1)) * psi_prev;
        psi_prev = psi;
        psi = psi_next;
        a *= z / std::sqrt(static_cast<double>(n + 1));
    }
    return {sum, norm_sq};
}

}  // namespace

complex oracle_state(const FourierGaussianState& state, const OscillatorConfig& cfg, const CylinderPoint& at,
                     double t)
{
    check_width(state, cfg);
    return angular_oracle(state, at.phi(), t).value * meridian_oracle(state, cfg.omega(), at.l(), t).value;
}

double oracle_density(const FourierGaussianState& state, const OscillatorConfig& cfg, const CylinderPoint& at,
                      double t)
{
    check_width(state, cfg);
    const Amplitude ang = angular_oracle(state, at.phi(), t);
    const Amplitude mer = meridian_oracle(state, cfg.omega(), at.l(), t);
    return std::norm(ang.value) / ang.norm_sq * std::norm(mer.value) / mer.norm_sq;
}

complex oracle_expectation_U(const FourierGaussianState& state, double t)
{
    complex sum{0.0, 0.0};
    double norm_sq = 0.0;
    for (int n = -state.n_max; n <= state.n_max; ++n) {
        norm_sq += std::norm(state.coeff(n));
        if (n < state.n_max)
            sum += std::conj(state.coeff(n + 1)) * state.coeff(n) * std::polar(1.0, t * (n + 0.5));
    }
    return sum / norm_sq;
}

// ---------------------------------------------------------------------------
// Trajectories and grids

std::vector<TrajectorySample> mean_trajectory(const CoherentParams& params, const OscillatorConfig& cfg,
                                              std::span<const double> t_grid, const Tolerance& tol)
{
    std::vector<TrajectorySample> out(t_grid.size());
    detail::parallel_for(t_grid.size(), [&](std::size_t i) {
        const double t = t_grid[i];
        const complex u = expectation_U(params, t, tol);
        out[i] = {t, wrap_two_pi(std::arg(u)), expectation_l(params, cfg, t), std::abs(u)};
    });
    return out;
}

double DensityGrid::integrate() const
{
    const auto w = trapezoid_weights(l_values);
    double sum = 0.0;
    for (std::size_t i = 0; i < phi_values.size(); ++i)
        for (std::size_t j = 0; j < l_values.size(); ++j)
            sum += w[j] * at(i, j);
    const double dphi = kTwoPi / static_cast<double>(phi_values.size());
    return sum * dphi / kTwoPi;
}

double DensityGrid::mean_l() const
{
    const auto w = trapezoid_weights(l_values);
    double sum = 0.0;
    for (std::size_t i = 0; i < phi_values.size(); ++i)
        for (std::size_t j = 0; j < l_values.size(); ++j)
            sum += w[j] * l_values[j] * at(i, j);
    const double dphi = kTwoPi / static_cast<double>(phi_values.size());
    return sum * dphi / kTwoPi;
}

std::vector<double> uniform_phi_grid(std::size_t n)
{
    if (n < 1)
        throw std::invalid_argument("uniform_phi_grid: need at least one point");
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i)
        out[i] = kTwoPi * static_cast<double>(i) / static_cast<double>(n);
    return out;
}

std::vector<double> uniform_grid(double lo, double hi, std::size_t n)
{
    if (n < 2 || !(hi > lo) || !std::isfinite(lo) || !std::isfinite(hi))
        throw std::invalid_argument("uniform_grid: need n >= 2 and finite lo < hi");
    std::vector<double> out(n);
    const double h = (hi - lo) / static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i)
        out[i] = lo + h * static_cast<double>(i);
    out.back() = hi;
    return out;
}

std::pair<double, double> default_l_range(const CoherentParams& params, const OscillatorConfig& cfg)
{
    const double amplitude = std::hypot(params.q_pos(), params.p_mom() / cfg.omega());
    const double margin = 8.0 / std::sqrt(cfg.omega());
    return {-amplitude - margin, amplitude + margin};
}

DensityGrid density_grid(const CoherentParams& params, const OscillatorConfig& cfg, double t,
                         std::vector<double> phi_values, std::vector<double> l_values, const Tolerance& tol)
{
    require_finite(t, "t");
    DensityGrid grid{std::move(phi_values), std::move(l_values), {}};
    const std::size_t n_phi = grid.phi_values.size();
    const std::size_t n_l = grid.l_values.size();

    std::vector<double> meridian(n_l);
    for (std::size_t j = 0; j < n_l; ++j)
        meridian[j] = meridian_density(params, cfg, grid.l_values[j], t);

    grid.values.resize(n_phi * n_l);
    const double norm = norm_constant(params.J(), tol);
    detail::parallel_for(n_phi, [&](std::size_t row) {
        const double angular = std::norm(angular_theta(params, grid.phi_values[row], t, tol)) / norm;
        for (std::size_t j = 0; j < n_l; ++j)
            grid.values[row * n_l + j] = angular * meridian[j];
    });
    return grid;
}

}  // namespace cylosc
