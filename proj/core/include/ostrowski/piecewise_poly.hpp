#pragma once

#include "ostrowski/interval.hpp"
#include "ostrowski/polynomial.hpp"

#include <span>
#include <vector>

namespace ostrowski {

/// A discontinuity: `height` is the right value minus the left limit.
struct Jump {
    double at = 0.0;
    double height = 0.0;
};

/// Breakpoint-delimited polynomial pieces over an interval, right-continuous
/// at interior breakpoints. Used for the cumulative variation V and the
/// variation profile v; jump heights are derived from the pieces.
class PiecewisePoly {
public:
    /// `breaks` has pieces.size() + 1 strictly increasing entries spanning
    /// `domain` exactly.
    PiecewisePoly(Interval domain, std::vector<double> breaks, std::vector<Polynomial> pieces);

    const Interval& domain() const noexcept { return domain_; }
    std::span<const double> breaks() const noexcept { return breaks_; }
    std::span<const Polynomial> pieces() const noexcept { return pieces_; }
    /// Jumps at interior breakpoints with nonzero height.
    std::span<const Jump> jumps() const noexcept { return jumps_; }

    double operator()(double t) const;
    double left_limit(double t) const;
    double integral(double c, double d) const;

    /// Index of the piece that owns t under right-continuity.
    std::size_t piece_index(double t) const;

private:
    Interval domain_;
    std::vector<double> breaks_;
    std::vector<Polynomial> pieces_;
    std::vector<Jump> jumps_;
};

}  // namespace ostrowski
