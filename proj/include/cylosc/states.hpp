// Coherent states of the harmonic oscillator on a cylinder.
//
// The configuration space is the unit-radius cylinder (cos phi, sin phi, l).
// Wavefunctions f(phi, l) are normalized with respect to the measure
// (1/2 pi) dphi dl, so the angular part of every density integrates to one
// against dphi / (2 pi) and the meridian part against dl.
//
// Two independent routes are provided for every physical quantity:
//   - closed forms built on Jacobi theta functions (coherent_state,
//     evolved_state, density, expectation_U);
//   - a truncated Fourier / number-state synthesis (FourierGaussianState and
//     the oracle_* functions), used to cross-check the closed forms.

#pragma once

#include <complex>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cylosc/theta.hpp"

namespace cylosc {

using complex = std::complex<double>;
using theta::Tolerance;

/// Label (J, alpha, q, p) of a coherent state. J and alpha are the classical
/// angular momentum and angle on the parallel; q and p the position and
/// momentum on the meridian. alpha is stored reduced to [0, 2 pi).
class CoherentParams {
public:
    CoherentParams(double J, double alpha, double q_pos, double p_mom);

    double J() const { return J_; }
    double alpha() const { return alpha_; }
    double q_pos() const { return q_pos_; }
    double p_mom() const { return p_mom_; }

private:
    double J_;
    double alpha_;
    double q_pos_;
    double p_mom_;
};

/// Meridian oscillator frequency. Values below kMinOmega are rejected since
/// the meridian wave packet width 1/sqrt(omega) diverges.
class OscillatorConfig {
public:
    static constexpr double kMinOmega = 1e-6;

    explicit OscillatorConfig(double omega);

    double omega() const { return omega_; }

private:
    double omega_;
};

/// A point on the cylinder; phi is stored reduced to [0, 2 pi).
class CylinderPoint {
public:
    CylinderPoint(double phi, double l);

    double phi() const { return phi_; }
    double l() const { return l_; }

private:
    double phi_;
    double l_;
};

class CutoffTooSmall : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Initial wavefunction (omega/pi)^(1/4) theta_3((phi - alpha - iJ)/2pi | i/2pi)
/// * exp(-(omega/2)(l - q)^2 + ip(l - q/2)).
complex coherent_state(const CoherentParams& params, const OscillatorConfig& cfg,
                       const CylinderPoint& at, const Tolerance& tol = {});

/// Closed-form solution of the Schroedinger equation starting from coherent_state.
complex evolved_state(const CoherentParams& params, const OscillatorConfig& cfg,
                      const CylinderPoint& at, double t, const Tolerance& tol = {});

/// theta_3(iJ/pi | i/pi) = SUM_n exp(-n^2 - 2nJ), the squared norm of the angular part.
double norm_constant(double J, const Tolerance& tol = {});

/// Normalized angular density |theta_3((phi - alpha - iJ)/2pi | (i - t)/2pi)|^2 / norm_constant(J).
/// Integrates to one against dphi / (2 pi).
double angular_density(const CoherentParams& params, double phi, double t, const Tolerance& tol = {});

/// Normalized Gaussian sqrt(omega/pi) exp(-omega (l - <l>(t))^2).
double meridian_density(const CoherentParams& params, const OscillatorConfig& cfg, double l, double t);

/// Probability density at time t: angular_density * meridian_density.
double density(const CoherentParams& params, const OscillatorConfig& cfg, const CylinderPoint& at,
               double t, const Tolerance& tol = {});

/// <U(t)> = e^(-1/4) e^(i alpha) theta_2(t/2pi - iJ/pi | i/pi) / theta_3(iJ/pi | i/pi).
complex expectation_U(const CoherentParams& params, double t, const Tolerance& tol = {});

/// <l(t)> = q cos(omega t) + (p/omega) sin(omega t).
double expectation_l(const CoherentParams& params, const OscillatorConfig& cfg, double t);

// ---------------------------------------------------------------------------
// Fourier oracle

/// Truncated representation of a coherent state: angular coefficients
/// c_n = exp(-n^2/2 + nJ - i n alpha) for |n| <= n_max, times a Gaussian on
/// the meridian centered at gauss_center with width 1/sqrt(omega), momentum
/// gauss_momentum and annihilation eigenvalue gauss_z.
struct FourierGaussianState {
    int n_max = 0;
    std::vector<complex> coeffs;  // coeffs[n + n_max]
    double gauss_center = 0.0;
    double gauss_width = 1.0;
    double gauss_momentum = 0.0;
    complex gauss_z;

    complex coeff(int n) const { return coeffs[static_cast<std::size_t>(n + n_max)]; }
};

/// |J| + 12 rounded up; the coefficient tail is below 1e-15 relative.
int default_cutoff(double J);

/// Throws CutoffTooSmall if max(|c_{-n_max}|, |c_{n_max}|) exceeds rel_tol
/// times the largest coefficient.
FourierGaussianState fourier_coefficients(const CoherentParams& params, const OscillatorConfig& cfg,
                                          int n_max, double rel_tol = 1e-13);

/// Wavefunction at time t synthesized term by term: angular modes evolve with
/// exp(-i t n^2 / 2), the meridian Gaussian is expanded in oscillator number
/// states which evolve with exp(-i omega (n + 1/2) t).
complex oracle_state(const FourierGaussianState& state, const OscillatorConfig& cfg,
                     const CylinderPoint& at, double t);

/// |oracle_state|^2 divided by the squared norm of the truncated expansion.
double oracle_density(const FourierGaussianState& state, const OscillatorConfig& cfg,
                      const CylinderPoint& at, double t);

/// SUM_n conj(c_{n+1}) c_n exp(i t (n + 1/2)) / SUM_n |c_n|^2.
complex oracle_expectation_U(const FourierGaussianState& state, double t);

// ---------------------------------------------------------------------------
// Trajectories and grids

struct TrajectorySample {
    double t;
    double phi;  // Arg <U(t)> in [0, 2 pi), not unwrapped
    double l;
    double abs_U;
};

std::vector<TrajectorySample> mean_trajectory(const CoherentParams& params, const OscillatorConfig& cfg,
                                              std::span<const double> t_grid, const Tolerance& tol = {});

/// Density sampled on a phi x l grid, row-major over (phi, l).
/// phi_values must be the uniform periodic grid 2 pi i / N for integrate() to
/// be the trapezoid rule.
struct DensityGrid {
    std::vector<double> phi_values;
    std::vector<double> l_values;
    std::vector<double> values;

    double at(std::size_t i_phi, std::size_t i_l) const { return values[i_phi * l_values.size() + i_l]; }

    /// (1/2 pi) * trapezoid quadrature of the density, periodic in phi.
    double integrate() const;
    /// (1/2 pi) * trapezoid quadrature of l * density.
    double mean_l() const;
};

/// N points 2 pi i / N, i = 0..N-1.
std::vector<double> uniform_phi_grid(std::size_t n);
/// n >= 2 points from lo to hi inclusive.
std::vector<double> uniform_grid(double lo, double hi, std::size_t n);

/// [-A - 8/sqrt(omega), A + 8/sqrt(omega)] with A the amplitude of <l(t)>.
std::pair<double, double> default_l_range(const CoherentParams& params, const OscillatorConfig& cfg);

/// Evaluates the density on the grid. The density factorizes, so theta
/// functions are evaluated once per phi value. Runs in parallel over phi;
/// results do not depend on the thread count.
DensityGrid density_grid(const CoherentParams& params, const OscillatorConfig& cfg, double t,
                         std::vector<double> phi_values, std::vector<double> l_values,
                         const Tolerance& tol = {});

}  // namespace cylosc
