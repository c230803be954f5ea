// Phase discontinuities of Arg <U(t)>.
//
// For integer J, <U(t)> passes through zero at t* = (2k+1) pi and its phase
// jumps by pi there. At the same instants the angular density has two equal
// maxima, so the particle is found with equal probability at two antipodal
// points of the parallel.

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cylosc/states.hpp"

namespace cylosc {

struct JumpPoint {
    std::int64_t k;
    double t_star;     // (2k+1) pi
    double phi_minus;  // Arg <U(t* - eps)> in [0, 2 pi)
    double phi_plus;   // Arg <U(t* + eps)> in [0, 2 pi)
    double l;          // <l(t*)>
    double delta_phi;  // phi_plus - phi_minus wrapped to (-pi, pi]
};

/// First trigonometric moment of a set of angles.
struct CircularStats {
    /// Resultant lengths below this are numerically indistinguishable from a
    /// balanced set; the mean direction is then reported as NaN.
    static constexpr double kUndefinedBelow = 1e-10;

    double mean = 0.0;             // in [0, 2 pi), NaN when undefined
    double resultant_length = 0.0; // in [0, 1]
    double spread = 0.0;           // circular standard deviation sqrt(-2 ln R)
};

CircularStats circular_stats(std::span<const double> angles);

struct JumpCloud {
    std::vector<JumpPoint> points;
    double circular_mean_phi = 0.0;  // over phi_minus and phi_plus together
    double circular_spread = 0.0;
    double resultant_length = 0.0;
    bool non_integer_J = false;      // jump magnitude is not guaranteed
};

JumpCloud jump_points(const CoherentParams& params, const OscillatorConfig& cfg, std::int64_t k_min,
                      std::int64_t k_max, double eps = 1e-6, const Tolerance& tol = {});

struct Discontinuity {
    double t;          // midpoint of the flagged sampling interval
    double delta_phi;  // wrapped phase increment across it
};

/// Samples Arg <U(t)> at t_begin + i dt and flags increments whose deviation
/// from the last accepted increment exceeds threshold. Arg <U(t)> does not
/// depend on omega, so no oscillator config is needed.
std::vector<Discontinuity> scan_discontinuities(const CoherentParams& params, double t_begin, double t_end,
                                                double dt, double threshold, const Tolerance& tol = {});

struct AngularMaximum {
    double phi;
    double height;
};

/// Local maxima of angular_density(params, ., t) over the parallel, highest
/// first. Located on a grid of `samples` points and polished with Brent's method.
std::vector<AngularMaximum> angular_maxima(const CoherentParams& params, double t, std::size_t samples = 1024,
                                           const Tolerance& tol = {});

}  // namespace cylosc
