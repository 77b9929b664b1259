#include "ostrowski/piecewise_poly.hpp"

#include "ostrowski/error.hpp"

#include <algorithm>
#include <cmath>

namespace ostrowski {

PiecewisePoly::PiecewisePoly(Interval domain, std::vector<double> breaks,
                             std::vector<Polynomial> pieces)
    : domain_(domain), breaks_(std::move(breaks)), pieces_(std::move(pieces)) {
    if (pieces_.empty() || breaks_.size() != pieces_.size() + 1) {
        throw ValidationError("PiecewisePoly: need pieces.size() + 1 breaks");
    }
    if (breaks_.front() != domain_.a() || breaks_.back() != domain_.b()) {
        throw ValidationError("PiecewisePoly: breaks must span the domain exactly");
    }
    for (std::size_t i = 0; i + 1 < breaks_.size(); ++i) {
        if (!(breaks_[i] < breaks_[i + 1])) {
            throw ValidationError("PiecewisePoly: breaks must be strictly increasing");
        }
    }
    for (std::size_t i = 1; i < pieces_.size(); ++i) {
        const double t = breaks_[i];
        const double left = pieces_[i - 1](t);
        const double right = pieces_[i](t);
        const double h = right - left;
        // Continuous junctions rarely cancel to exactly zero.
        const double noise = 1e-13 * (1.0 + std::max(std::abs(left), std::abs(right)));
        if (std::abs(h) > noise) {
            jumps_.push_back({t, h});
        }
    }
}

std::size_t PiecewisePoly::piece_index(double t) const {
    if (!domain_.contains(t)) {
        throw DomainError("PiecewisePoly: t outside the domain");
    }
    const auto it = std::upper_bound(breaks_.begin() + 1, breaks_.end() - 1, t);
    return static_cast<std::size_t>(it - (breaks_.begin() + 1));
}

double PiecewisePoly::operator()(double t) const { return pieces_[piece_index(t)](t); }

double PiecewisePoly::left_limit(double t) const {
    if (!domain_.contains(t)) {
        throw DomainError("PiecewisePoly: t outside the domain");
    }
    const auto it = std::lower_bound(breaks_.begin() + 1, breaks_.end() - 1, t);
    return pieces_[static_cast<std::size_t>(it - (breaks_.begin() + 1))](t);
}

double PiecewisePoly::integral(double c, double d) const {
    if (c > d) {
        throw ArgumentError("PiecewisePoly::integral: c > d");
    }
    if (!domain_.contains(c) || !domain_.contains(d)) {
        throw DomainError("PiecewisePoly::integral: bounds outside the domain");
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
        const double lo = std::max(c, breaks_[i]);
        const double hi = std::min(d, breaks_[i + 1]);
        if (lo < hi) {
            sum += pieces_[i].integrate(lo, hi);
        }
    }
    return sum;
}

}  // namespace ostrowski
