#include "ostrowski/harness/discrepancy.hpp"

#include "ostrowski/error.hpp"
#include "ostrowski/harness/stieltjes.hpp"

#include <cmath>

namespace ostrowski::harness {

double printed_kernel_moment(const CompanionBounds& cb, double x, double p) {
    const PwmFunction& f = cb.function();
    const Interval& iv = f.domain();
    const double a = iv.a();
    const double m = iv.midpoint();
    const double edge = (std::pow(m - x, p) - std::pow(x - a, p)) * cb.profile_at(x);
    const double inner = cb.profile_moment(a, x, a, p - 1.0);
    const double outer = std::pow(m - x, p - 1.0) * cb.profile().integral(x, m);
    return edge + p * (inner - outer);
}

KernelDiscrepancy kernel_discrepancy_report(const CompanionBounds& cb, double x, int p) {
    if (p < 2) {
        throw ArgumentError("kernel_discrepancy_report: p must be an integer >= 2");
    }
    const PwmFunction& f = cb.function();
    const Interval& iv = f.domain();
    if (!iv.in_left_half(x)) {
        throw DomainError("kernel_discrepancy_report: x must lie in [a, (a+b)/2]");
    }
    const double pr = static_cast<double>(p);
    KernelDiscrepancy out;
    out.x = x;
    out.p = p;
    out.oracle =
        weighted_variation_integral(WeightFunction::abs_power(PiecewiseKernel::companion(x, iv), pr), f)
            .value;
    out.corrected = cb.holder_moment(x, pr);
    out.printed = printed_kernel_moment(cb, x, pr);

    // Relative 1e-9, floored at the rounding level of the closed forms, whose
    // terms are each bounded by ((b-a)/2)^p times the total variation.
    const double scale = std::pow(0.5 * iv.length(), pr) * f.total_variation();
    out.tolerance = 1e-9 * std::abs(out.oracle) + 1e-13 * scale;
    out.corrected_matches = std::abs(out.corrected - out.oracle) <= out.tolerance;
    out.printed_matches = std::abs(out.printed - out.oracle) <= out.tolerance;
    out.degenerate = x == iv.midpoint() || f.variation(x, iv.midpoint()) == 0.0;
    return out;
}

KernelDiscrepancy kernel_discrepancy_report(const PwmFunction& f, double x, int p) {
    return kernel_discrepancy_report(CompanionBounds(f), x, p);
}

}  // namespace ostrowski::harness
