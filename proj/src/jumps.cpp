#include "cylosc/jumps.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <boost/math/tools/minima.hpp>

#include "cylosc/angles.hpp"
#include "parallel.hpp"

namespace cylosc {

CircularStats circular_stats(std::span<const double> angles)
{
    if (angles.empty())
        return {std::numeric_limits<double>::quiet_NaN(), 0.0, std::numeric_limits<double>::infinity()};

    double c = 0.0, s = 0.0;
    for (double a : angles) {
        c += std::cos(a);
        s += std::sin(a);
    }
    const auto n = static_cast<double>(angles.size());
    const double r = std::min(1.0, std::hypot(c, s) / n);

    CircularStats stats;
    stats.resultant_length = r;
    stats.mean = r < CircularStats::kUndefinedBelow ? std::numeric_limits<double>::quiet_NaN()
                                                    : wrap_two_pi(std::atan2(s, c));
    stats.spread = r > 0.0 ? std::sqrt(-2.0 * std::log(r)) : std::numeric_limits<double>::infinity();
    return stats;
}

JumpCloud jump_points(const CoherentParams& params, const OscillatorConfig& cfg, std::int64_t k_min,
                      std::int64_t k_max, double eps, const Tolerance& tol)
{
    if (!(eps > 0.0) || !std::isfinite(eps))
        throw std::invalid_argument("jump_points: eps must be positive");
    if (k_max < k_min)
        throw std::invalid_argument("jump_points: empty k range");

    JumpCloud cloud;
    cloud.non_integer_J = std::abs(params.J() - std::round(params.J())) > 1e-12;
    cloud.points.resize(static_cast<std::size_t>(k_max - k_min + 1));

    detail::parallel_for(cloud.points.size(), [&](std::size_t i) {
        const std::int64_t k = k_min + static_cast<std::int64_t>(i);
        const double t_star = static_cast<double>(2 * k + 1) * kPi;
        const double phi_minus = wrap_two_pi(std::arg(expectation_U(params, t_star - eps, tol)));
        const double phi_plus = wrap_two_pi(std::arg(expectation_U(params, t_star + eps, tol)));
        cloud.points[i] = {k, t_star, phi_minus, phi_plus, expectation_l(params, cfg, t_star),
                           wrap_pi(phi_plus - phi_minus)};
    });

    std::vector<double> angles;
    angles.reserve(2 * cloud.points.size());
    for (const auto& p : cloud.points) {
        angles.push_back(p.phi_minus);
        angles.push_back(p.phi_plus);
    }
    const CircularStats stats = circular_stats(angles);
    cloud.circular_mean_phi = stats.mean;
    cloud.circular_spread = stats.spread;
    cloud.resultant_length = stats.resultant_length;
    return cloud;
}

std::vector<Discontinuity> scan_discontinuities(const CoherentParams& params, double t_begin, double t_end,
                                                double dt, double threshold, const Tolerance& tol)
{
    if (!(dt > 0.0) || !std::isfinite(t_begin) || !std::isfinite(t_end) || !(t_end > t_begin))
        throw std::invalid_argument("scan_discontinuities: need dt > 0 and t_begin < t_end");

    const auto steps = static_cast<std::size_t>(std::floor((t_end - t_begin) / dt + 1e-9));
    std::vector<double> phase(steps + 1);
    detail::parallel_for(phase.size(), [&](std::size_t i) {
        phase[i] = std::arg(expectation_U(params, t_begin + static_cast<double>(i) * dt, tol));
    });

    std::vector<Discontinuity> flagged;
    double drift = 0.0;
    for (std::size_t i = 0; i + 1 < phase.size(); ++i) {
        const double step = wrap_pi(phase[i + 1] - phase[i]);
        if (std::abs(wrap_pi(step - drift)) > threshold) {
            flagged.push_back({t_begin + (static_cast<double>(i) + 0.5) * dt, step});
        } else {
            drift = step;
        }
    }
    return flagged;
}

std::vector<AngularMaximum> angular_maxima(const CoherentParams& params, double t, std::size_t samples,
                                           const Tolerance& tol)
{
    if (samples < 3)
        throw std::invalid_argument("angular_maxima: need at least 3 samples");

    const double h = kTwoPi / static_cast<double>(samples);
    std::vector<double> values(samples);
    detail::parallel_for(samples, [&](std::size_t i) {
        values[i] = angular_density(params, h * static_cast<double>(i), t, tol);
    });

    auto negated = [&](double phi) { return -angular_density(params, phi, t, tol); };
    constexpr int bits = std::numeric_limits<double>::digits / 2;

    std::vector<AngularMaximum> maxima;
    for (std::size_t i = 0; i < samples; ++i) {
        const double left = values[(i + samples - 1) % samples];
        const double right = values[(i + 1) % samples];
        if (values[i] > left && values[i] >= right) {
            const double center = h * static_cast<double>(i);
            const auto [phi, neg] = boost::math::tools::brent_find_minima(negated, center - h, center + h, bits);
            maxima.push_back({wrap_two_pi(phi), -neg});
        }
    }
    std::sort(maxima.begin(), maxima.end(),
              [](const AngularMaximum& a, const AngularMaximum& b) { return a.height > b.height; });
    return maxima;
}

}  // namespace cylosc
