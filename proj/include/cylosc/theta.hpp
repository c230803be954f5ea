// Jacobi theta functions theta_2 and theta_3 with a guaranteed truncation error.
//
// Convention used throughout the library:
//
//   theta_3(v|tau) = SUM_n exp(i pi tau n^2)       exp(2 pi i n v)
//   theta_2(v|tau) = SUM_n exp(i pi tau (n+1/2)^2) exp((2n+1) pi i v)
//
// with the sum over all integers n and Im(tau) > 0. With this convention
// theta_3((phi - alpha - iJ)/(2 pi) | i/(2 pi)) is exactly the Fourier series
// SUM_n exp(-n^2/2) exp(nJ) exp(in(phi - alpha)) of a coherent state on the
// circle.
//
// The series are summed directly (no modular transformation). Every call site
// in this library has Im(tau) >= 1/(2 pi), where a few dozen terms suffice.

#pragma once

#include <complex>
#include <stdexcept>

namespace cylosc::theta {

using complex = std::complex<double>;

struct ThetaInput {
    complex v;
    complex tau;
};

struct Tolerance {
    double abs_tol = 1e-13;
    int max_terms = 64;
};

/// Im(tau) <= 0: the series diverges.
class NonConvergent : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// The requested tolerance would need more than Tolerance::max_terms terms.
class TruncationOverflow : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Smallest N such that the theta_3 terms with |n| > N sum (in modulus) to at
/// most tol.abs_tol. Term moduli are bounded by exp(-pi Im(tau) n^2 + 2 pi |im_v| n)
/// and the tail is bounded geometrically once that exponent is decreasing.
int truncation_bound(complex tau, double im_v, const Tolerance& tol = {});

/// theta_3(v|tau), truncated symmetrically to |n| <= truncation_bound(...).
complex theta3(const ThetaInput& input, const Tolerance& tol = {});

/// theta_2(v|tau), truncated to |n + 1/2| <= N + 1/2.
complex theta2(const ThetaInput& input, const Tolerance& tol = {});

}  // namespace cylosc::theta
