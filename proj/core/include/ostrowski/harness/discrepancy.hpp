#pragma once

#include "ostrowski/bounds.hpp"
#include "ostrowski/pwm_function.hpp"

namespace ostrowski::harness {

/// The Hölder moment R(x) = int |K(x,t)|^p dV(t) three ways.
struct KernelDiscrepancy {
    double x = 0.0;
    int p = 2;
    double oracle = 0.0;     ///< direct Stieltjes integral
    double corrected = 0.0;  ///< closed form with ((a+b)/2 - t)^(p-1)
    double printed = 0.0;    ///< closed form with ((a+b)/2 - x)^(p-1)
    double tolerance = 0.0;
    bool corrected_matches = false;
    bool printed_matches = false;
    /// x = (a+b)/2 or no variation on (x, (a+b)/2]: the two forms coincide.
    bool degenerate = false;
};

/// Closed form with the constant second branch ((a+b)/2 - x)^(p-1).
double printed_kernel_moment(const CompanionBounds& cb, double x, double p);

/// Requires integer p >= 2 and x in [a, (a+b)/2].
KernelDiscrepancy kernel_discrepancy_report(const PwmFunction& f, double x, int p);
KernelDiscrepancy kernel_discrepancy_report(const CompanionBounds& cb, double x, int p);

}  // namespace ostrowski::harness
