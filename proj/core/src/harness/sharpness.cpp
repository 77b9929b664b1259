#include "ostrowski/harness/sharpness.hpp"

#include "ostrowski/bounds.hpp"
#include "ostrowski/error.hpp"

#include <cmath>
#include <vector>

namespace ostrowski::harness {

std::string to_string(SharpnessFamily f) {
    switch (f) {
    case SharpnessFamily::outer_quarter: return "outer_quarter";
    case SharpnessFamily::midpoint_half: return "midpoint_half";
    case SharpnessFamily::trapezoid_type_quarter: return "trapezoid_type_quarter";
    }
    return "unknown";
}

SharpnessFamily sharpness_family_from_string(const std::string& s) {
    for (SharpnessFamily f : {SharpnessFamily::outer_quarter, SharpnessFamily::midpoint_half,
                              SharpnessFamily::trapezoid_type_quarter}) {
        if (to_string(f) == s) {
            return f;
        }
    }
    throw ArgumentError("unknown sharpness family '" + s + "'");
}

PwmFunction sharpness_witness(SharpnessFamily family, double eps, const Interval& iv) {
    if (!(eps > 0.0 && eps < iv.length() / 8.0)) {
        throw ArgumentError("sharpness probe: eps must lie in (0, (b-a)/8)");
    }
    std::vector<double> centres;
    if (family == SharpnessFamily::midpoint_half) {
        centres = {iv.midpoint()};
    } else {
        centres = {iv.quarter(), iv.reflect(iv.quarter())};
    }
    std::vector<double> rights;
    std::vector<Polynomial> polys;
    for (double c : centres) {
        rights.push_back(c - 0.5 * eps);
        polys.push_back(Polynomial::constant(0.0));
        rights.push_back(c + 0.5 * eps);
        polys.push_back(Polynomial::constant(1.0));
    }
    rights.push_back(iv.b());
    polys.push_back(Polynomial::constant(0.0));
    return PwmFunction(iv, rights, std::move(polys));
}

SharpnessPoint sharpness_probe(SharpnessFamily family, double eps, const Interval& iv) {
    const PwmFunction f = sharpness_witness(family, eps, iv);
    SharpnessPoint pt;
    pt.family = family;
    pt.epsilon = eps;
    switch (family) {
    case SharpnessFamily::outer_quarter: {
        const CompanionBounds cb(f);
        pt.lhs = cb.lhs(iv.quarter());
        pt.bound = cb.outer(iv.quarter());
        break;
    }
    case SharpnessFamily::trapezoid_type_quarter: {
        const SpecialCaseReport r = special_case_bounds(f, SpecialCase::trapezoid_type);
        pt.lhs = r.report.lhs;
        pt.bound = 0.25 * f.total_variation();
        break;
    }
    case SharpnessFamily::midpoint_half: {
        const double m = iv.midpoint();
        pt.lhs = std::abs(f(m) - f.integral_mean());
        pt.bound = ostrowski_bv_bound(f, m);
        break;
    }
    }
    pt.ratio = pt.lhs / pt.bound;
    return pt;
}

}  // namespace ostrowski::harness
