#include "cylosc/theta.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace cylosc::theta {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr complex kI{0.0, 1.0};

void validate(complex tau, double im_v, const Tolerance& tol)
{
    if (!(tol.abs_tol > 0.0) || !std::isfinite(tol.abs_tol) || tol.max_terms < 1)
        throw std::invalid_argument("theta: tolerance needs abs_tol > 0 and max_terms >= 1");
    if (!std::isfinite(tau.real()) || !std::isfinite(tau.imag()) || !std::isfinite(im_v))
        throw std::invalid_argument("theta: non-finite argument");
    if (!(tau.imag() > 0.0))
        throw NonConvergent("theta: Im(tau) must be positive, got " + std::to_string(tau.imag()));
}

void validate(const ThetaInput& in, const Tolerance& tol)
{
    if (!std::isfinite(in.v.real()))
        throw std::invalid_argument("theta: non-finite argument");
    validate(in.tau, in.v.imag(), tol);
}

// Smallest N >= 0 such that 2 * SUM_{x = N+1+offset, N+2+offset, ...} exp(-a x^2 + b x)
// is at most tol.abs_tol. The factor 2 covers both signs of the summation index.
int tail_bound(double a, double b, double offset, const Tolerance& tol)
{
    const double log_tol = std::log(tol.abs_tol);
    for (int n = 0; n <= tol.max_terms; ++n) {
        const double x0 = n + 1 + offset;
        // Ratio of consecutive terms from x0 onwards; it only shrinks as x grows.
        const double log_ratio = -a * (2.0 * x0 + 1.0) + b;
        if (log_ratio >= 0.0)
            continue;
        const double log_tail =
            std::log(2.0) - a * x0 * x0 + b * x0 - std::log1p(-std::exp(log_ratio));
        if (log_tail <= log_tol)
            return n;
    }
    throw TruncationOverflow("theta: truncation needs more than " +
                             std::to_string(tol.max_terms) + " terms");
}

}  // namespace

int truncation_bound(complex tau, double im_v, const Tolerance& tol)
{
    validate(tau, im_v, tol);
    return tail_bound(kPi * tau.imag(), 2.0 * kPi * std::abs(im_v), 0.0, tol);
}

complex theta3(const ThetaInput& input, const Tolerance& tol)
{
    validate(input, tol);
    const int n_max = tail_bound(kPi * input.tau.imag(), 2.0 * kPi * std::abs(input.v.imag()), 0.0, tol);

    // Exact periods: 1 in v, 2 in tau.
    const complex v{std::remainder(input.v.real(), 1.0), input.v.imag()};
    const complex tau{std::remainder(input.tau.real(), 2.0), input.tau.imag()};

    auto term = [&](double n) { return std::exp(kI * kPi * tau * (n * n) + 2.0 * kPi * kI * n * v); };

    complex sum{0.0, 0.0};
    for (int n = n_max; n >= 1; --n)
        sum += term(n) + term(-n);
    return sum + 1.0;
}

complex theta2(const ThetaInput& input, const Tolerance& tol)
{
    validate(input, tol);
    const int n_max = tail_bound(kPi * input.tau.imag(), 2.0 * kPi * std::abs(input.v.imag()), 0.5, tol);

    // Exact periods: 2 in v, 8 in tau.
    const complex v{std::remainder(input.v.real(), 2.0), input.v.imag()};
    const complex tau{std::remainder(input.tau.real(), 8.0), input.tau.imag()};

    auto term = [&](double m) { return std::exp(kI * kPi * tau * (m * m) + 2.0 * kPi * kI * m * v); };

    complex sum{0.0, 0.0};
    for (int n = n_max; n >= 0; --n)
        sum += term(n + 0.5) + term(-n - 0.5);
    return sum;
}

}  // namespace cylosc::theta
