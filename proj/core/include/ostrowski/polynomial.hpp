#pragma once

#include <span>
#include <utility>
#include <vector>

namespace ostrowski {

/// Dense polynomial in the shifted variable (t - origin):
///
///     p(t) = sum_k coeffs[k] * (t - origin)^k
///
/// Keeping an explicit origin makes reflection t -> s - t exact and keeps
/// short segments far from zero well conditioned.
class Polynomial {
public:
    static constexpr int kMaxDegree = 8;

    Polynomial() = default;
    explicit Polynomial(std::vector<double> coeffs, double origin = 0.0);

    static Polynomial constant(double c) { return Polynomial({c}); }
    /// t - origin, the identity shifted to `origin`.
    static Polynomial linear_from(double origin, double slope = 1.0) {
        return Polynomial({0.0, slope}, origin);
    }

    double operator()(double t) const noexcept;

    /// Degree after trimming trailing zeros; the zero polynomial has degree 0.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    double origin() const noexcept { return origin_; }
    std::span<const double> coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == 0.0; }

    Polynomial derivative() const;
    /// Antiderivative vanishing at the origin.
    Polynomial antiderivative() const;
    double integrate(double c, double d) const;

    /// Same function expressed around `origin` (Taylor shift).
    Polynomial recentered(double origin) const;
    /// q(t) = p(sum - t).
    Polynomial reflected(double sum) const;

    Polynomial operator-() const;
    Polynomial& operator*=(double k);
    friend Polynomial operator+(const Polynomial& p, const Polynomial& q);
    friend Polynomial operator-(const Polynomial& p, const Polynomial& q);
    friend Polynomial operator*(const Polynomial& p, const Polynomial& q);
    friend Polynomial operator*(Polynomial p, double k) { return p *= k; }
    friend Polynomial operator*(double k, Polynomial p) { return p *= k; }
    friend Polynomial operator+(Polynomial p, double c);

    /// Real roots in [c, d], ascending, isolated through the derivative cascade
    /// and refined by bisection. Tangential (even multiplicity) roots are only
    /// reported when the polynomial evaluates to exactly zero there.
    std::vector<double> roots(double c, double d) const;

    /// (min, max) of p over [c, d], evaluated at the endpoints and at the real
    /// critical points inside.
    std::pair<double, double> range(double c, double d) const;

private:
    void trim();

    std::vector<double> coeffs_{0.0};
    double origin_ = 0.0;
};

/// Integral over [c, d] of |t - anchor|^exponent * p(t). [c, d] must lie on one
/// side of `anchor`. Exact for every real exponent > -1 (the polynomial is
/// re-expanded around the anchor and integrated term by term).
double power_moment(const Polynomial& p, double anchor, double exponent, double c, double d);

}  // namespace ostrowski
