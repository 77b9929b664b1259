#pragma once

#include "ostrowski/interval.hpp"
#include "ostrowski/pwm_function.hpp"

#include <string>

namespace ostrowski::harness {

enum class SharpnessFamily { outer_quarter, midpoint_half, trapezoid_type_quarter };

std::string to_string(SharpnessFamily f);
SharpnessFamily sharpness_family_from_string(const std::string& s);

struct SharpnessPoint {
    SharpnessFamily family = SharpnessFamily::outer_quarter;
    double epsilon = 0.0;
    double lhs = 0.0;
    double bound = 0.0;
    double ratio = 0.0;
};

/// Unit boxes of width eps: at (3a+b)/4 and (a+3b)/4 for the quarter
/// families, at (a+b)/2 for midpoint_half.
PwmFunction sharpness_witness(SharpnessFamily family, double eps, const Interval& iv);

/// lhs / (constant * total variation) for the witness; tends to 1 as eps -> 0.
/// Requires 0 < eps < (b-a)/8.
SharpnessPoint sharpness_probe(SharpnessFamily family, double eps,
                               const Interval& iv = Interval(0.0, 1.0));

}  // namespace ostrowski::harness
