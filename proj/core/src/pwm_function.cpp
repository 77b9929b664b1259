#include "ostrowski/pwm_function.hpp"

#include "ostrowski/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace ostrowski {

Monotonicity classify_segment(double left, double right, const Polynomial& p,
                              const Tolerance& tol) {
    if (!std::isfinite(left) || !std::isfinite(right)) {
        throw ValidationError("segment endpoints must be finite");
    }
    if (!(left < right)) {
        throw ValidationError("segment requires left < right");
    }
    if (p.degree() > Polynomial::kMaxDegree) {
        throw ValidationError("segment degree " + std::to_string(p.degree()) + " exceeds " +
                              std::to_string(Polynomial::kMaxDegree));
    }
    for (double c : p.coeffs()) {
        if (!std::isfinite(c)) {
            throw ValidationError("segment coefficients must be finite");
        }
    }

    // Exact: the extrema of p' sit at the endpoints or at real roots of p''.
    const auto [lo, hi] = p.derivative().range(left, right);
    const double s = tol.slack(std::max(std::abs(lo), std::abs(hi)));
    const bool up = lo >= -s;
    const bool down = hi <= s;
    if (up && down) {
        const double rise = p(right) - p(left);
        if (rise > 0.0) return Monotonicity::nondecreasing;
        if (rise < 0.0) return Monotonicity::nonincreasing;
        return Monotonicity::constant;
    }
    if (up) return Monotonicity::nondecreasing;
    if (down) return Monotonicity::nonincreasing;
    throw ValidationError("segment [" + std::to_string(left) + ", " + std::to_string(right) +
                          "] is not monotone (derivative ranges over [" + std::to_string(lo) +
                          ", " + std::to_string(hi) + "])");
}

PwmFunction::PwmFunction(Interval domain, std::span<const double> rights,
                         std::vector<Polynomial> polys, const Tolerance& tol)
    : domain_(domain) {
    if (rights.empty() || rights.size() != polys.size()) {
        throw ValidationError("PwmFunction: need one right endpoint per segment");
    }
    double left = domain_.a();
    segments_.reserve(rights.size());
    for (std::size_t i = 0; i < rights.size(); ++i) {
        double right = rights[i];
        if (i + 1 == rights.size()) {
            if (std::abs(right - domain_.b()) > 1e-12 * domain_.length()) {
                throw ValidationError("PwmFunction: last segment must end at b");
            }
            right = domain_.b();
        } else if (!(right < domain_.b())) {
            throw ValidationError("PwmFunction: interior breakpoint " + std::to_string(i) +
                                  " must lie inside (a, b)");
        }
        if (!(left < right)) {
            throw ValidationError("PwmFunction: segment " + std::to_string(i) +
                                  " is empty or out of order");
        }
        const Monotonicity dir = classify_segment(left, right, polys[i], tol);
        segments_.push_back({left, right, polys[i].recentered(left), dir});
        left = right;
    }
    compute_totals();
}

PwmFunction::PwmFunction(Interval domain, std::vector<PolySegment> segments)
    : domain_(domain), segments_(std::move(segments)) {
    compute_totals();
}

PwmFunction PwmFunction::constant(Interval domain, double c) {
    const double rights[] = {domain.b()};
    return PwmFunction(domain, rights, {Polynomial::constant(c)});
}

PwmFunction PwmFunction::from_polynomial(Interval domain, Polynomial p, const Tolerance& tol) {
    const double rights[] = {domain.b()};
    return PwmFunction(domain, rights, {std::move(p)}, tol);
}

void PwmFunction::compute_totals() {
    total_variation_ = variation(domain_.a(), domain_.b());
}

std::size_t PwmFunction::segment_index(double t) const {
    if (!domain_.contains(t)) {
        throw DomainError("t = " + std::to_string(t) + " lies outside [" +
                          std::to_string(domain_.a()) + ", " + std::to_string(domain_.b()) + "]");
    }
    const auto it = std::upper_bound(segments_.begin(), segments_.end() - 1, t,
                                     [](double x, const PolySegment& s) { return x < s.right; });
    return static_cast<std::size_t>(it - segments_.begin());
}

double PwmFunction::operator()(double t) const { return segments_[segment_index(t)].poly(t); }

double PwmFunction::left_limit(double t) const {
    if (!domain_.contains(t)) {
        throw DomainError("left_limit: t outside the domain");
    }
    const auto it = std::lower_bound(segments_.begin(), segments_.end() - 1, t,
                                     [](const PolySegment& s, double x) { return s.right < x; });
    return it->poly(t);
}

std::vector<double> PwmFunction::breakpoints() const {
    std::vector<double> out;
    for (std::size_t i = 1; i < segments_.size(); ++i) {
        out.push_back(segments_[i].left);
    }
    return out;
}

std::vector<Jump> PwmFunction::jumps() const {
    std::vector<Jump> out;
    for (std::size_t i = 1; i < segments_.size(); ++i) {
        const double t = segments_[i].left;
        const double h = segments_[i].poly(t) - segments_[i - 1].poly(t);
        if (h != 0.0) {
            out.push_back({t, h});
        }
    }
    return out;
}

double PwmFunction::variation(double c, double d) const {
    if (c > d) {
        throw ArgumentError("variation: c > d");
    }
    const std::size_t first = segment_index(c);
    (void)segment_index(d);
    if (c == d) {
        return 0.0;
    }
    double v = 0.0;
    for (std::size_t i = first; i < segments_.size(); ++i) {
        const PolySegment& s = segments_[i];
        if (i > first) {
            if (s.left > d) {
                break;
            }
            v += std::abs(s.poly(s.left) - segments_[i - 1].poly(s.left));
            if (s.left == d) {
                break;
            }
        }
        const double lo = std::max(c, s.left);
        const double hi = std::min(d, s.right);
        v += std::abs(s.poly(hi) - s.poly(lo));
    }
    return v;
}

double PwmFunction::integral(double c, double d) const {
    if (c > d) {
        throw ArgumentError("integral: c > d");
    }
    const std::size_t first = segment_index(c);
    (void)segment_index(d);
    double sum = 0.0;
    for (std::size_t i = first; i < segments_.size() && segments_[i].left < d; ++i) {
        const PolySegment& s = segments_[i];
        const double lo = std::max(c, s.left);
        const double hi = std::min(d, s.right);
        if (lo < hi) {
            sum += s.poly.integrate(lo, hi);
        }
    }
    return sum;
}

PiecewisePoly PwmFunction::cumulative_variation() const {
    std::vector<double> breaks{domain_.a()};
    std::vector<Polynomial> pieces;
    double acc = 0.0;
    for (std::size_t i = 0; i < segments_.size(); ++i) {
        const PolySegment& s = segments_[i];
        if (i > 0) {
            acc += std::abs(s.poly(s.left) - segments_[i - 1].poly(s.left));
        }
        const double sign = s.direction == Monotonicity::nonincreasing ? -1.0 : 1.0;
        pieces.push_back((s.poly * sign + (acc - sign * s.poly(s.left))).recentered(s.left));
        breaks.push_back(s.right);
        acc += std::abs(s.poly(s.right) - s.poly(s.left));
    }
    return PiecewisePoly(domain_, std::move(breaks), std::move(pieces));
}

PiecewisePoly PwmFunction::variation_profile() const {
    const double a = domain_.a();
    const double m = domain_.midpoint();
    const PiecewisePoly cum = cumulative_variation();

    std::vector<double> breaks{a, m};
    for (std::size_t i = 1; i < segments_.size(); ++i) {
        const double t = segments_[i].left;
        if (t > a && t < m) {
            breaks.push_back(t);
        } else if (t > m) {
            const double r = domain_.reflect(t);
            if (r > a && r < m) {
                breaks.push_back(r);
            }
        }
    }
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

    const double sum = a + domain_.b();
    std::vector<Polynomial> pieces;
    pieces.reserve(breaks.size() - 1);
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        const double tau = 0.5 * (breaks[i] + breaks[i + 1]);
        const Polynomial& near = cum.pieces()[cum.piece_index(tau)];
        const Polynomial& far = cum.pieces()[cum.piece_index(domain_.reflect(tau))];
        pieces.push_back(far.reflected(sum).recentered(breaks[i]) - near.recentered(breaks[i]));
    }
    return PiecewisePoly(Interval(a, m), std::move(breaks), std::move(pieces));
}

bool PwmFunction::is_symmetric(double tol) const {
    if (tol < 0.0) {
        throw ArgumentError("is_symmetric: tol must be >= 0");
    }
    std::vector<double> pts{domain_.a(), domain_.b()};
    for (double t : breakpoints()) {
        pts.push_back(t);
        pts.push_back(domain_.reflect(t));
    }
    constexpr int kGrid = 257;
    for (int k = 0; k < kGrid; ++k) {
        pts.push_back(domain_.a() + domain_.length() * k / (kGrid - 1));
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const std::size_t n = pts.size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
        pts.push_back(0.5 * (pts[i] + pts[i + 1]));
    }
    for (double t : pts) {
        const double r = std::clamp(domain_.reflect(t), domain_.a(), domain_.b());
        if (std::abs((*this)(t) - (*this)(r)) > tol) {
            return false;
        }
    }
    return true;
}

PwmFunction PwmFunction::restricted(double c, double d) const {
    if (!(c < d)) {
        throw ArgumentError("restricted: need c < d");
    }
    (void)segment_index(d);
    std::vector<PolySegment> segs;
    for (std::size_t i = segment_index(c); i < segments_.size(); ++i) {
        const PolySegment& s = segments_[i];
        if (s.left >= d) {
            break;
        }
        segs.push_back({std::max(c, s.left), std::min(d, s.right), s.poly, s.direction});
    }
    return PwmFunction(Interval(c, d), std::move(segs));
}

PwmFunction PwmFunction::scaled(double k) const {
    std::vector<PolySegment> segs = segments_;
    for (PolySegment& s : segs) {
        s.poly *= k;
        if (k == 0.0) {
            s.direction = Monotonicity::constant;
        } else if (k < 0.0 && s.direction != Monotonicity::constant) {
            s.direction = s.direction == Monotonicity::nondecreasing ? Monotonicity::nonincreasing
                                                                     : Monotonicity::nondecreasing;
        }
    }
    return PwmFunction(domain_, std::move(segs));
}

PwmFunction PwmFunction::shifted(double s) const {
    std::vector<PolySegment> segs;
    segs.reserve(segments_.size());
    for (const PolySegment& seg : segments_) {
        const auto c = seg.poly.coeffs();
        segs.push_back({seg.left + s, seg.right + s,
                        Polynomial(std::vector<double>(c.begin(), c.end()), seg.poly.origin() + s),
                        seg.direction});
    }
    segs.front().left = domain_.a() + s;
    segs.back().right = domain_.b() + s;
    return PwmFunction(Interval(domain_.a() + s, domain_.b() + s), std::move(segs));
}

}  // namespace ostrowski
