#pragma once

#include <algorithm>
#include <cmath>

namespace ostrowski {

/// Absolute + relative comparison slack for closed-form results.
struct Tolerance {
    double abs = 1e-9;
    double rel = 1e-9;

    double slack(double scale) const noexcept { return abs + rel * std::abs(scale); }

    bool close(double x, double y) const noexcept {
        return std::abs(x - y) <= slack(std::max(std::abs(x), std::abs(y)));
    }

    /// x <= y up to slack(scale).
    bool leq(double x, double y, double scale) const noexcept { return x <= y + slack(scale); }
};

}  // namespace ostrowski
