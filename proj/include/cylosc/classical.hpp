// Closed-form classical motion on the cylinder: uniform rotation with angular
// velocity J on the parallel, harmonic oscillation with frequency omega on the
// meridian. Energy H = p_l^2/2 + J^2/2 + omega^2 l^2/2.

#pragma once

#include <cstdint>

#include "cylosc/states.hpp"

namespace cylosc {

struct ClassicalInitial {
    double phi0;
    double J;
    double l0;
    double p_l0;
};

struct ClassicalSample {
    double t;
    double phi;  // in [0, 2 pi)
    double l;
    double p_l;
    double energy;
};

ClassicalSample classical_solution(const ClassicalInitial& init, const OscillatorConfig& cfg, double t);

/// sqrt(l0^2 + (p_l0/omega)^2), the largest |l| reached.
double meridian_amplitude(const ClassicalInitial& init, const OscillatorConfig& cfg);

struct Commensurability {
    bool periodic = false;
    double period = 0.0;        // least common period when periodic
    std::int64_t numerator = 0;    // omega / |J| ~= numerator / denominator
    std::int64_t denominator = 0;
};

/// Tests whether omega and omega_J = |J| are commensurable. Walks the
/// continued-fraction convergents a/b of omega/|J| with b <= max_denominator
/// and accepts the first one with |b * omega/|J| - a| <= tol, i.e. the orbit
/// closes to within tol of a cycle after b turns. J = 0 is always periodic
/// with the meridian period 2 pi / omega.
Commensurability is_periodic(const OscillatorConfig& cfg, double J, double tol = 1e-9,
                             std::int64_t max_denominator = 1'000'000);

}  // namespace cylosc
