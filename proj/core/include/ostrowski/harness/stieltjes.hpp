#pragma once

#include "ostrowski/interval.hpp"
#include "ostrowski/polynomial.hpp"
#include "ostrowski/pwm_function.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace ostrowski::harness {

/// Piecewise polynomial integrand u on [a, b], left-continuous at its
/// interior breaks (K(x, .) is). Zero-width pieces are dropped.
class PiecewiseKernel {
public:
    PiecewiseKernel(Interval domain, std::vector<double> breaks, std::vector<Polynomial> pieces);

    /// K(x, .) on iv.
    static PiecewiseKernel companion(double x, const Interval& iv);
    static PiecewiseKernel polynomial(Polynomial u, const Interval& iv);

    const Interval& domain() const noexcept { return domain_; }
    std::span<const double> breaks() const noexcept { return breaks_; }
    std::span<const Polynomial> pieces() const noexcept { return pieces_; }

    double operator()(double t) const;
    /// max |u'| over the pieces.
    double lipschitz() const;
    /// sup |u| over the closed pieces.
    double sup_abs() const;

private:
    Interval domain_;
    std::vector<double> breaks_;
    std::vector<Polynomial> pieces_;
};

/// Nonnegative weight w on [a, b], left-continuous at breaks. Pieces carry a
/// polynomial when one exists (closed-form integration); otherwise only a
/// pointwise evaluator (numeric integration).
class WeightFunction {
public:
    struct Piece {
        double left = 0.0;
        double right = 0.0;
        std::optional<Polynomial> poly;
        std::function<double(double)> eval;
    };

    WeightFunction(Interval domain, std::vector<Piece> pieces);

    static WeightFunction constant(const Interval& iv, double c);
    /// |u|^p, split at the real roots of every piece. Polynomial pieces when p
    /// is an integer.
    static WeightFunction abs_power(const PiecewiseKernel& u, double p);

    const Interval& domain() const noexcept { return domain_; }
    std::span<const Piece> pieces() const noexcept { return pieces_; }
    double operator()(double t) const;

private:
    Interval domain_;
    std::vector<Piece> pieces_;
};

struct StieltjesSum {
    double value = 0.0;
    /// Lipschitz(u) * mesh * total variation of f; bounds |sum - integral|.
    double slack = 0.0;
    double mesh = 0.0;
};

/// Riemann-Stieltjes sum of u against df with midpoint tags over a uniform
/// n-cell grid refined through every breakpoint of f and of u.
StieltjesSum stieltjes_sum(const PiecewiseKernel& u, const PwmFunction& f, std::size_t n);

struct StieltjesIntegral {
    double value = 0.0;
    /// Accumulated numeric error estimate; zero when every piece was
    /// integrated in closed form.
    double error = 0.0;
};

/// Lebesgue-Stieltjes integral of w against the variation measure of f:
/// sum of int w |f'| dt over smooth pieces plus w(t_j) |jump_j|.
StieltjesIntegral weighted_variation_integral(const WeightFunction& w, const PwmFunction& f);

}  // namespace ostrowski::harness
