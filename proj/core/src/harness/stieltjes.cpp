#include "ostrowski/harness/stieltjes.hpp"

#include "ostrowski/error.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>

#include <algorithm>
#include <cmath>

namespace ostrowski::harness {

namespace {

/// Index of the piece owning t when pieces are left-continuous:
/// t in (breaks[i], breaks[i+1]] -> i, and t = a -> 0.
std::size_t left_continuous_index(std::span<const double> breaks, double t) {
    const auto it = std::lower_bound(breaks.begin() + 1, breaks.end() - 1, t);
    return static_cast<std::size_t>(it - (breaks.begin() + 1));
}

double sign_of(Monotonicity m) { return m == Monotonicity::nonincreasing ? -1.0 : 1.0; }

}  // namespace

PiecewiseKernel::PiecewiseKernel(Interval domain, std::vector<double> breaks,
                                 std::vector<Polynomial> pieces)
    : domain_(domain) {
    if (pieces.empty() || breaks.size() != pieces.size() + 1) {
        throw ArgumentError("PiecewiseKernel: need pieces.size() + 1 breaks");
    }
    if (breaks.front() != domain.a() || breaks.back() != domain.b()) {
        throw ArgumentError("PiecewiseKernel: breaks must span the domain");
    }
    breaks_.push_back(breaks.front());
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        if (breaks[i + 1] < breaks[i]) {
            throw ArgumentError("PiecewiseKernel: breaks must be nondecreasing");
        }
        if (breaks[i + 1] > breaks[i]) {
            breaks_.push_back(breaks[i + 1]);
            pieces_.push_back(std::move(pieces[i]));
        }
    }
}

PiecewiseKernel PiecewiseKernel::companion(double x, const Interval& iv) {
    if (!iv.in_left_half(x)) {
        throw DomainError("companion kernel: x must lie in [a, (a+b)/2]");
    }
    return PiecewiseKernel(iv, {iv.a(), x, iv.reflect(x), iv.b()},
                           {Polynomial::linear_from(iv.a()), Polynomial::linear_from(iv.midpoint()),
                            Polynomial::linear_from(iv.b())});
}

PiecewiseKernel PiecewiseKernel::polynomial(Polynomial u, const Interval& iv) {
    return PiecewiseKernel(iv, {iv.a(), iv.b()}, {std::move(u)});
}

double PiecewiseKernel::operator()(double t) const {
    if (!domain_.contains(t)) {
        throw DomainError("PiecewiseKernel: t outside the domain");
    }
    return pieces_[left_continuous_index(breaks_, t)](t);
}

double PiecewiseKernel::lipschitz() const {
    double lip = 0.0;
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
        const auto [lo, hi] = pieces_[i].derivative().range(breaks_[i], breaks_[i + 1]);
        lip = std::max({lip, std::abs(lo), std::abs(hi)});
    }
    return lip;
}

double PiecewiseKernel::sup_abs() const {
    double s = 0.0;
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
        const auto [lo, hi] = pieces_[i].range(breaks_[i], breaks_[i + 1]);
        s = std::max({s, std::abs(lo), std::abs(hi)});
    }
    return s;
}

WeightFunction::WeightFunction(Interval domain, std::vector<Piece> pieces)
    : domain_(domain), pieces_(std::move(pieces)) {
    if (pieces_.empty() || pieces_.front().left != domain.a() || pieces_.back().right != domain.b()) {
        throw ArgumentError("WeightFunction: pieces must span the domain");
    }
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
        Piece& p = pieces_[i];
        if (!(p.left < p.right) || (i > 0 && p.left != pieces_[i - 1].right)) {
            throw ArgumentError("WeightFunction: pieces must be contiguous and nonempty");
        }
        if (!p.eval) {
            if (!p.poly) {
                throw ArgumentError("WeightFunction: piece needs a polynomial or an evaluator");
            }
            p.eval = [poly = *p.poly](double t) { return poly(t); };
        }
    }
}

WeightFunction WeightFunction::constant(const Interval& iv, double c) {
    return WeightFunction(iv, {Piece{iv.a(), iv.b(), Polynomial::constant(c), {}}});
}

WeightFunction WeightFunction::abs_power(const PiecewiseKernel& u, double p) {
    if (!(p >= 1.0)) {
        throw ArgumentError("abs_power: p must be >= 1");
    }
    const bool integral_power = p == std::floor(p) && p <= 16.0;
    std::vector<Piece> out;
    const auto breaks = u.breaks();
    const auto pieces = u.pieces();
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        const Polynomial& poly = pieces[i];
        std::vector<double> cuts{breaks[i]};
        for (double r : poly.roots(breaks[i], breaks[i + 1])) {
            if (r > cuts.back() && r < breaks[i + 1]) {
                cuts.push_back(r);
            }
        }
        cuts.push_back(breaks[i + 1]);
        for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
            const double mid = 0.5 * (cuts[k] + cuts[k + 1]);
            const Polynomial signed_piece = poly(mid) < 0.0 ? -poly : poly;
            Piece piece{cuts[k], cuts[k + 1], std::nullopt, {}};
            if (integral_power) {
                Polynomial acc = signed_piece;
                for (int e = 1; e < static_cast<int>(p); ++e) {
                    acc = acc * signed_piece;
                }
                piece.poly = acc;
            } else {
                piece.eval = [signed_piece, p](double t) {
                    return std::pow(std::abs(signed_piece(t)), p);
                };
            }
            out.push_back(std::move(piece));
        }
    }
    return WeightFunction(u.domain(), std::move(out));
}

double WeightFunction::operator()(double t) const {
    if (!domain_.contains(t)) {
        throw DomainError("WeightFunction: t outside the domain");
    }
    const auto it = std::lower_bound(pieces_.begin(), pieces_.end() - 1, t,
                                     [](const Piece& p, double x) { return p.right < x; });
    return it->eval(t);
}

StieltjesSum stieltjes_sum(const PiecewiseKernel& u, const PwmFunction& f, std::size_t n) {
    if (n == 0) {
        throw ArgumentError("stieltjes_sum: n must be positive");
    }
    const Interval& iv = f.domain();
    if (!(u.domain() == iv)) {
        throw ArgumentError("stieltjes_sum: integrand and integrator domains differ");
    }
    std::vector<double> grid;
    grid.reserve(n + 1 + f.segments().size() + u.breaks().size());
    for (std::size_t i = 0; i <= n; ++i) {
        grid.push_back(i == n ? iv.b() : iv.a() + iv.length() * static_cast<double>(i) / n);
    }
    for (double t : f.breakpoints()) grid.push_back(t);
    for (double t : u.breaks()) grid.push_back(t);
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

    StieltjesSum s;
    double prev = f(grid.front());
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
        const double next = f(grid[i + 1]);
        s.value += u(0.5 * (grid[i] + grid[i + 1])) * (next - prev);
        s.mesh = std::max(s.mesh, grid[i + 1] - grid[i]);
        prev = next;
    }
    s.slack = u.lipschitz() * s.mesh * f.total_variation();
    return s;
}

StieltjesIntegral weighted_variation_integral(const WeightFunction& w, const PwmFunction& f) {
    const Interval& iv = f.domain();
    if (!(w.domain() == iv)) {
        throw ArgumentError("weighted_variation_integral: weight and function domains differ");
    }
    for (const auto& piece : w.pieces()) {
        double lowest;
        if (piece.poly) {
            lowest = piece.poly->range(piece.left, piece.right).first;
        } else {
            lowest = std::min({piece.eval(piece.left), piece.eval(piece.right),
                               piece.eval(0.5 * (piece.left + piece.right))});
        }
        const double scale = piece.poly ? std::abs(piece.poly->range(piece.left, piece.right).second)
                                        : std::abs(piece.eval(0.5 * (piece.left + piece.right)));
        if (lowest < -1e-12 * std::max(1.0, scale)) {
            throw ArgumentError("weighted_variation_integral: weight is negative on [" +
                                std::to_string(piece.left) + ", " + std::to_string(piece.right) +
                                "]");
        }
    }

    std::vector<double> cuts{iv.a(), iv.b()};
    for (const auto& piece : w.pieces()) cuts.push_back(piece.left);
    for (double t : f.breakpoints()) cuts.push_back(t);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    const auto wpieces = w.pieces();
    const auto segs = f.segments();
    StieltjesIntegral out;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double lo = cuts[i];
        const double hi = cuts[i + 1];
        const double mid = 0.5 * (lo + hi);
        const PolySegment& seg = segs[f.segment_index(mid)];
        if (seg.poly.degree() == 0) {
            continue;
        }
        const auto wp = std::lower_bound(wpieces.begin(), wpieces.end() - 1, mid,
                                         [](const auto& p, double x) { return p.right < x; });
        const Polynomial slope = seg.poly.derivative() * sign_of(seg.direction);
        if (wp->poly) {
            // multiply around the cell midpoint; far origins cost digits
            const double mid = 0.5 * (lo + hi);
            out.value += (wp->poly->recentered(mid) * slope.recentered(mid)).integrate(lo, hi);
        } else {
            auto integrand = [&](double t) { return wp->eval(t) * slope(t); };
            double err = 0.0;
            // endpoint behaviour is algebraic (|u|^p at a root of u)
            static thread_local boost::math::quadrature::tanh_sinh<double> ts;
            out.value += ts.integrate(integrand, lo, hi, 1e-13, &err);
            out.error += err;
        }
    }
    for (const Jump& j : f.jumps()) {
        out.value += w(j.at) * std::abs(j.height);
    }
    return out;
}

}  // namespace ostrowski::harness
