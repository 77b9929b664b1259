#pragma once

#include "ostrowski/bounds.hpp"
#include "ostrowski/pwm_function.hpp"

#include <optional>
#include <vector>

namespace ostrowski {

/// A cumulative distribution function on [a, b]: F(a) = 0, F(b) = 1 and
/// nondecreasing everywhere. Point masses are jumps (right-continuous).
class CdfModel {
public:
    explicit CdfModel(PwmFunction cdf, double endpoint_tol = 1e-12);

    const PwmFunction& cdf() const noexcept { return cdf_; }
    const Interval& domain() const noexcept { return cdf_.domain(); }
    double operator()(double t) const { return cdf_(t); }

private:
    PwmFunction cdf_;
};

/// E(X) = b - int_a^b F(t) dt
double expectation(const CdfModel& F);

/// T(x); the Q bound of F itself, since the variation of F over [t, a+b-t]
/// is F(a+b-t) - F(t).
double t_bound(const CdfModel& F, double x);
double t_holder_bound(const CdfModel& F, double x, const HolderExponent& h);

struct ProbHolderMembers {
    double p = 2.0;
    double t_holder = 0.0;
    /// {[((a+b)/2-x)^p - (x-a)^p][F(a+b-x) - F(x)] + (x-a)^p}^(1/p) / (b-a)
    double middle = 0.0;
    double enclosure = 0.0;
};

struct ProbReport {
    double x = 0.0;
    double expectation = 0.0;
    /// |(F(x) + F(a+b-x))/2 - (b - E(X))/(b-a)|
    double lhs = 0.0;
    double t_bound = 0.0;
    /// [2((3a+b)/4 - x)(F(a+b-x) - F(x)) + (x - a)] / (b-a)
    double middle = 0.0;
    /// 1/4 + |x - (3a+b)/4| / (b-a)
    double outer = 0.0;
    std::optional<ProbHolderMembers> holder;
    std::vector<ChainBreak> violations;
};

/// Evaluates and checks lhs <= T <= middle <= outer and, with h, T <= T_p <=
/// middle_p <= outer. Breaks are recorded in `violations`, never thrown.
ProbReport check_prob_chain(const CdfModel& F, double x,
                            const std::optional<HolderExponent>& h = std::nullopt,
                            const Tolerance& tol = {});

}  // namespace ostrowski
