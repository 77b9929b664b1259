#pragma once

#include "ostrowski/interval.hpp"
#include "ostrowski/piecewise_poly.hpp"
#include "ostrowski/pwm_function.hpp"
#include "ostrowski/tolerance.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ostrowski {

/// Hölder pair (p, q) with p > 1 and 1/p + 1/q = 1; q is always derived.
class HolderExponent {
public:
    explicit HolderExponent(double p);

    double p() const noexcept { return p_; }
    double q() const noexcept { return p_ / (p_ - 1.0); }
    bool is_integer() const noexcept;

private:
    double p_;
};

struct HolderMembers {
    double p = 2.0;
    double q_holder = 0.0;
    double coarse_holder = 0.0;
    /// Declared numeric error on q_holder (rounding in the closed form).
    double enclosure = 0.0;
};

/// Every member of one companion-inequality chain at a point x.
struct BoundReport {
    double x = 0.0;
    double rule = 0.0;  ///< (f(x) + f(a+b-x)) / 2
    double mean = 0.0;  ///< integral mean of f
    double lhs = 0.0;   ///< |rule - mean|
    double q_bound = 0.0;
    double coarse = 0.0;
    double outer = 0.0;
    double ostrowski_bv = 0.0;
    std::optional<HolderMembers> holder;
};

/// One broken link `lhs <= rhs` in a chain.
struct ChainBreak {
    std::string pair;
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;
};

/// Checks lhs <= q <= coarse <= outer (and q <= q_holder <= coarse_holder <=
/// outer when present) with slack tol.slack(outer), widened by the Hölder
/// enclosure, plus nonnegativity of every member.
std::vector<ChainBreak> chain_breaks(const BoundReport& r, const Tolerance& tol = {});

/// K(x, t): t-a on [a,x], t-(a+b)/2 on (x, a+b-x], t-b on (a+b-x, b].
double kernel_K(double x, double t, const Interval& iv);

/// (t-a)^(p-1) on [a,x], ((a+b)/2 - t)^(p-1) on (x, (a+b)/2].
///
/// The second branch depends on t. With the constant ((a+b)/2 - x)^(p-1)
/// the closed form no longer reproduces the Stieltjes moment
/// int |K(x,t)|^p dV(t); see harness/discrepancy.hpp.
double r_p_kernel(double x, double t, double p, const Interval& iv);

/// [1/4 + |x - (3a+b)/4| / (b-a)] * total_var
double outer_bound(double x, double total_var, const Interval& iv);

/// Evaluates the companion bounds for one function. Holds the cumulative
/// variation and variation profile so repeated queries at different x are
/// cheap. Every x must lie in [a, (a+b)/2] except for ostrowski_bv.
class CompanionBounds {
public:
    explicit CompanionBounds(PwmFunction f, Tolerance tol = {});

    const PwmFunction& function() const noexcept { return f_; }
    const PiecewisePoly& profile() const noexcept { return profile_; }
    const Tolerance& tolerance() const noexcept { return tol_; }

    double rule(double x) const;
    double lhs(double x) const;
    /// Exact v(x) = variation over [x, a+b-x].
    double profile_at(double x) const;

    double q(double x) const;
    /// R(x) = [((a+b)/2-x)^p - (x-a)^p] v(x) + p int r_p(x,t) sgn(x-t) v(t) dt.
    double holder_moment(double x, double p) const;
    double q_holder(double x, const HolderExponent& h) const;
    double q_holder_enclosure(double x, const HolderExponent& h) const;
    double coarse(double x) const;
    double coarse_holder(double x, const HolderExponent& h) const;
    double outer(double x) const;
    /// Classical bound; x may be anywhere in [a, b].
    double ostrowski_bv(double x) const;

    BoundReport report(double x, const std::optional<HolderExponent>& h = std::nullopt) const;

    /// sum over profile pieces of int_c^d |t - anchor|^e v(t) dt
    double profile_moment(double c, double d, double anchor, double exponent) const;

private:
    void require_left_half(double x, const char* who) const;
    double moment_rounding(double x, double p) const;

    PwmFunction f_;
    Tolerance tol_;
    PiecewisePoly profile_;
    double mean_;
};

double companion_rule(const PwmFunction& f, double x);
double q_bound(const PwmFunction& f, double x);
double q_holder_bound(const PwmFunction& f, double x, const HolderExponent& h);
double coarse_bound(const PwmFunction& f, double x);
double coarse_holder_bound(const PwmFunction& f, double x, const HolderExponent& h);
double ostrowski_bv_bound(const PwmFunction& f, double x);
BoundReport chain_report(const PwmFunction& f, double x,
                         const std::optional<HolderExponent>& h = std::nullopt);

enum class SpecialCase { trapezoid_type, trapezoid, midpoint, symmetric_endpoint };

std::string to_string(SpecialCase c);
SpecialCase special_case_from_string(const std::string& s);

struct SpecialCaseReport {
    SpecialCase which = SpecialCase::midpoint;
    BoundReport report;
    /// First refined bound written directly in terms of the profile.
    double corollary_bound = 0.0;
    std::optional<double> corollary_holder;
};

/// Chain at x = (3a+b)/4, a, (a+b)/2 or a. For symmetric_endpoint the LHS is
/// |f(a) - mean| and f must be symmetric about (a+b)/2. The dispatched Q and
/// Hölder values are cross-checked against the profile-only closed forms;
/// a mismatch throws ConsistencyError.
SpecialCaseReport special_case_bounds(const PwmFunction& f, SpecialCase which,
                                      const std::optional<HolderExponent>& h = std::nullopt,
                                      const Tolerance& tol = {});

}  // namespace ostrowski
