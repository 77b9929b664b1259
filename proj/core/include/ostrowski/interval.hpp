#pragma once

#include "ostrowski/error.hpp"

#include <cmath>
#include <string>

namespace ostrowski {

/// Closed interval [a, b] with a < b, both finite.
class Interval {
public:
    Interval(double a, double b) : a_(a), b_(b) {
        if (!std::isfinite(a) || !std::isfinite(b)) {
            throw ValidationError("interval endpoints must be finite");
        }
        if (!(a < b)) {
            throw ValidationError("interval requires a < b, got [" + std::to_string(a) + ", " +
                                  std::to_string(b) + "]");
        }
    }

    double a() const noexcept { return a_; }
    double b() const noexcept { return b_; }
    double length() const noexcept { return b_ - a_; }
    double midpoint() const noexcept { return 0.5 * (a_ + b_); }
    /// (3a+b)/4, the trapezoid-type evaluation point.
    double quarter() const noexcept { return 0.25 * (3.0 * a_ + b_); }
    /// a + b - t
    double reflect(double t) const noexcept { return (a_ + b_) - t; }

    bool contains(double t) const noexcept { return a_ <= t && t <= b_; }
    bool in_left_half(double t) const noexcept { return a_ <= t && t <= midpoint(); }

    friend bool operator==(const Interval&, const Interval&) = default;

private:
    double a_;
    double b_;
};

}  // namespace ostrowski
