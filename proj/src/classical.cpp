#include "cylosc/classical.hpp"

#include <cmath>
#include <stdexcept>

#include "cylosc/angles.hpp"

namespace cylosc {

ClassicalSample classical_solution(const ClassicalInitial& init, const OscillatorConfig& cfg, double t)
{
    const double omega = cfg.omega();
    const double c = std::cos(omega * t);
    const double s = std::sin(omega * t);
    const double l = init.l0 * c + init.p_l0 / omega * s;
    const double p_l = init.p_l0 * c - omega * init.l0 * s;
    const double energy = 0.5 * (p_l * p_l + init.J * init.J + omega * omega * l * l);
    return {t, wrap_two_pi(init.phi0 + init.J * t), l, p_l, energy};
}

double meridian_amplitude(const ClassicalInitial& init, const OscillatorConfig& cfg)
{
    return std::hypot(init.l0, init.p_l0 / cfg.omega());
}

Commensurability is_periodic(const OscillatorConfig& cfg, double J, double tol, std::int64_t max_denominator)
{
    if (!std::isfinite(J) || !(tol > 0.0) || max_denominator < 1)
        throw std::invalid_argument("is_periodic: need finite J, tol > 0, max_denominator >= 1");

    const double omega = cfg.omega();
    if (J == 0.0)
        return {true, kTwoPi / omega, 0, 0};

    const double ratio = omega / std::abs(J);

    // Convergents h_k / k_k of the continued fraction of ratio.
    std::int64_t h_prev = 1, h = static_cast<std::int64_t>(std::floor(ratio));
    std::int64_t k_prev = 0, k = 1;
    double rest = ratio - std::floor(ratio);
    while (k <= max_denominator) {
        if (std::abs(static_cast<double>(k) * ratio - static_cast<double>(h)) <= tol) {
            // omega T = 2 pi h and |J| T = 2 pi k
            return {true, kTwoPi * static_cast<double>(k) / std::abs(J), h, k};
        }
        if (rest == 0.0)
            break;
        const double inv = 1.0 / rest;
        const double a = std::floor(inv);
        rest = inv - a;
        if (a > static_cast<double>(max_denominator))
            break;
        const auto ai = static_cast<std::int64_t>(a);
        const std::int64_t h_next = ai * h + h_prev;
        const std::int64_t k_next = ai * k + k_prev;
        h_prev = h;
        h = h_next;
        k_prev = k;
        k = k_next;
    }
    return {false, 0.0, 0, 0};
}

}  // namespace cylosc
