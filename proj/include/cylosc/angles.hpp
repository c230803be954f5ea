#pragma once

#include <cmath>
#include <numbers>

namespace cylosc {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Reduces an angle into [0, 2 pi).
inline double wrap_two_pi(double angle)
{
    double r = std::fmod(angle, kTwoPi);
    if (r < 0.0)
        r += kTwoPi;
    // fmod of a tiny negative number can round up to exactly 2 pi
    return r >= kTwoPi ? 0.0 : r;
}

/// Reduces an angle into (-pi, pi]; an exact -pi maps to +pi.
inline double wrap_pi(double angle)
{
    double r = std::remainder(angle, kTwoPi);
    return r <= -kPi ? r + kTwoPi : r;
}

}  // namespace cylosc
