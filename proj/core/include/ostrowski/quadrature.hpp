#pragma once

#include "ostrowski/pwm_function.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace ostrowski {

/// Per-cell evaluation offset: x_i = left_i + lambda * h_i, 0 <= lambda <= 1/2.
class CellRule {
public:
    /// lambda = 1/4 evaluates each cell at its (3a+b)/4 point, where the
    /// outer-bound constant is smallest.
    CellRule() = default;
    explicit CellRule(double lambda);

    double lambda() const noexcept { return lambda_; }
    /// The evaluation point inside [left, right], never past the midpoint.
    double point(double left, double right) const noexcept;

private:
    double lambda_ = 0.25;
};

enum class Certification { coarse, refined };

std::string to_string(Certification c);
Certification certification_from_string(const std::string& s);

struct QuadratureCell {
    double left = 0.0;
    double right = 0.0;
    double estimate = 0.0;  ///< h * companion rule on the cell
    double bound = 0.0;     ///< h * per-cell error bound
};

struct QuadratureResult {
    double estimate = 0.0;
    double error_bound = 0.0;
    std::vector<QuadratureCell> cells;
    Certification cert = Certification::refined;
    /// False when an adaptive run stopped at max_cells above the tolerance.
    bool converged = true;
};

/// Companion-rule estimate and certified bound on a single cell [c, d].
QuadratureCell integrate_cell(const PwmFunction& f, double c, double d, const CellRule& rule,
                              Certification cert);

/// Uniform n-cell composite rule. Throws ArgumentError for n = 0.
QuadratureResult composite_integrate(const PwmFunction& f, std::size_t n, const CellRule& rule = {},
                                     Certification cert = Certification::refined);

/// Repeatedly bisects the cell with the largest bound (leftmost on ties)
/// until the total bound is at most `tol` or `max_cells` cells exist. Never
/// throws on non-convergence; `converged` reports it instead.
QuadratureResult adaptive_integrate(const PwmFunction& f, double tol, const CellRule& rule = {},
                                    Certification cert = Certification::refined,
                                    std::size_t max_cells = 65536);

}  // namespace ostrowski
