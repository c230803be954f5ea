// Dataset writers behind the command-line tool. Each writer emits a CSV with a
// fixed header, comma separated, '\n' line endings, 17 significant digits.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

#include "cylosc/angles.hpp"

namespace cylosc {

/// Invalid run configuration (maps to exit code 2 in the tool).
class ArgumentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Shared physics parameters default to omega = 1, alpha = 0.75 pi, J = 1,
/// q = -0.7, p = 0.2.
struct RunConfig {
    double omega = 1.0;
    double alpha = 0.75 * kPi;
    double J = 1.0;
    double q = -0.7;
    double p = 0.2;
    double tol = 1e-13;

    double t = kPi;
    double t_max = 4.0 * kPi;
    double dt = 0.01;
    std::int64_t k_min = 0;
    std::int64_t k_max = 999;
    double eps = 1e-6;
    std::int64_t grid_phi = 256;
    std::int64_t grid_l = 256;
    std::optional<double> l_min;  // default_l_range when unset
    std::optional<double> l_max;
    std::string out_path = "-";
};

/// Throws ArgumentError when a field violates its invariant.
void validate(const RunConfig& cfg);

void write_density_csv(const RunConfig& cfg, std::ostream& out);
void write_trajectory_csv(const RunConfig& cfg, std::ostream& out);
void write_jumps_csv(const RunConfig& cfg, std::ostream& out);
void write_classical_csv(const RunConfig& cfg, std::ostream& out);

}  // namespace cylosc
