#pragma once

#include "ostrowski/interval.hpp"
#include "ostrowski/piecewise_poly.hpp"
#include "ostrowski/polynomial.hpp"
#include "ostrowski/tolerance.hpp"

#include <span>
#include <vector>

namespace ostrowski {

enum class Monotonicity { constant, nondecreasing, nonincreasing };

/// One monotone polynomial piece on [left, right].
struct PolySegment {
    double left = 0.0;
    double right = 0.0;
    Polynomial poly;
    Monotonicity direction = Monotonicity::constant;
};

/// Checks a candidate segment and classifies its direction. Throws
/// ValidationError if the polynomial is not monotone on [left, right], has
/// degree above Polynomial::kMaxDegree, or has non-finite data.
Monotonicity classify_segment(double left, double right, const Polynomial& p,
                              const Tolerance& tol = {});

/// Piecewise-monotone, piecewise-polynomial function of bounded variation on
/// [a, b] with finitely many jumps.
///
/// On [left, right) a segment's polynomial defines f; f(b) is the last
/// polynomial at b. So f is right-continuous at every interior breakpoint and
/// has no jumps at the endpoints.
class PwmFunction {
public:
    /// `rights[i]` closes segment i; segment 0 starts at domain.a().
    PwmFunction(Interval domain, std::span<const double> rights, std::vector<Polynomial> polys,
                const Tolerance& tol = {});

    static PwmFunction constant(Interval domain, double c);
    /// Single segment holding `p` on the whole domain.
    static PwmFunction from_polynomial(Interval domain, Polynomial p, const Tolerance& tol = {});

    const Interval& domain() const noexcept { return domain_; }
    std::span<const PolySegment> segments() const noexcept { return segments_; }

    double operator()(double t) const;
    double eval(double t) const { return (*this)(t); }
    double left_limit(double t) const;

    /// Interior breakpoints, ascending.
    std::vector<double> breakpoints() const;
    /// Interior jumps with nonzero height.
    std::vector<Jump> jumps() const;

    /// Exact total variation of f over [c, d]. The jump at c is excluded (f(c)
    /// is the right value) and the jump at d is included.
    double variation(double c, double d) const;
    double total_variation() const { return total_variation_; }

    double integral(double c, double d) const;
    double integral_mean() const { return integral(domain_.a(), domain_.b()) / domain_.length(); }

    /// V(t) = variation(a, t).
    PiecewisePoly cumulative_variation() const;
    /// v(t) = V(a+b-t) - V(t) on [a, (a+b)/2].
    PiecewisePoly variation_profile() const;

    /// |f(t) - f(a+b-t)| <= tol at every breakpoint, every reflected
    /// breakpoint, the midpoints between them, and a uniform 257-point grid.
    bool is_symmetric(double tol) const;

    /// f on [c, d] as a function in its own right. The right edge takes the
    /// left limit, so a jump exactly at d is dropped; a jump exactly at c
    /// survives as the right-continuous value f(c).
    PwmFunction restricted(double c, double d) const;

    PwmFunction scaled(double k) const;
    /// g(t) = f(t - s) on [a + s, b + s].
    PwmFunction shifted(double s) const;

    std::size_t segment_index(double t) const;

private:
    PwmFunction(Interval domain, std::vector<PolySegment> segments);
    void compute_totals();

    Interval domain_;
    std::vector<PolySegment> segments_;
    double total_variation_ = 0.0;
};

}  // namespace ostrowski
