#include "ostrowski/quadrature.hpp"

#include "ostrowski/bounds.hpp"
#include "ostrowski/error.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace ostrowski {

CellRule::CellRule(double lambda) : lambda_(lambda) {
    if (!(lambda >= 0.0 && lambda <= 0.5)) {
        throw ArgumentError("cell rule lambda must lie in [0, 1/2]");
    }
}

double CellRule::point(double left, double right) const noexcept {
    const double mid = 0.5 * (left + right);
    if (lambda_ == 0.5) {
        return mid;
    }
    return std::min(left + lambda_ * (right - left), mid);
}

std::string to_string(Certification c) {
    return c == Certification::coarse ? "coarse" : "refined";
}

Certification certification_from_string(const std::string& s) {
    if (s == "coarse") return Certification::coarse;
    if (s == "refined") return Certification::refined;
    throw ArgumentError("certification must be 'coarse' or 'refined', got '" + s + "'");
}

QuadratureCell integrate_cell(const PwmFunction& f, double c, double d, const CellRule& rule,
                              Certification cert) {
    const PwmFunction g = f.restricted(c, d);
    const double x = rule.point(c, d);
    const double h = d - c;
    QuadratureCell cell{c, d, 0.0, 0.0};
    cell.estimate = h * 0.5 * (g(x) + g(g.domain().reflect(x)));
    if (cert == Certification::refined) {
        cell.bound = h * CompanionBounds(g).q(x);
    } else {
        cell.bound = h * outer_bound(x, g.total_variation(), g.domain());
    }
    return cell;
}

namespace {

void finish(QuadratureResult& r) {
    std::sort(r.cells.begin(), r.cells.end(),
              [](const QuadratureCell& x, const QuadratureCell& y) { return x.left < y.left; });
    r.estimate = 0.0;
    r.error_bound = 0.0;
    for (const QuadratureCell& c : r.cells) {
        r.estimate += c.estimate;
        r.error_bound += c.bound;
    }
}

}  // namespace

QuadratureResult composite_integrate(const PwmFunction& f, std::size_t n, const CellRule& rule,
                                     Certification cert) {
    if (n == 0) {
        throw ArgumentError("composite_integrate: need at least one cell");
    }
    const Interval& iv = f.domain();
    QuadratureResult r;
    r.cert = cert;
    r.cells.reserve(n);
    double left = iv.a();
    for (std::size_t i = 1; i <= n; ++i) {
        const double right =
            i == n ? iv.b() : iv.a() + iv.length() * static_cast<double>(i) / static_cast<double>(n);
        r.cells.push_back(integrate_cell(f, left, right, rule, cert));
        left = right;
    }
    finish(r);
    return r;
}

QuadratureResult adaptive_integrate(const PwmFunction& f, double tol, const CellRule& rule,
                                    Certification cert, std::size_t max_cells) {
    if (!(tol > 0.0)) {
        throw ArgumentError("adaptive_integrate: tol must be positive");
    }
    if (max_cells == 0) {
        throw ArgumentError("adaptive_integrate: max_cells must be positive");
    }
    // Largest bound first; leftmost among equals.
    auto order = [](const QuadratureCell& x, const QuadratureCell& y) {
        if (x.bound != y.bound) return x.bound > y.bound;
        return x.left < y.left;
    };
    std::multiset<QuadratureCell, decltype(order)> queue(order);
    const Interval& iv = f.domain();
    queue.insert(integrate_cell(f, iv.a(), iv.b(), rule, cert));
    double total = queue.begin()->bound;
    bool stuck = false;

    while (queue.size() < max_cells) {
        if (total <= tol) {
            // Running sums drift; confirm before stopping.
            total = 0.0;
            for (const QuadratureCell& c : queue) total += c.bound;
            if (total <= tol) break;
        }
        const QuadratureCell worst = *queue.begin();
        const double mid = 0.5 * (worst.left + worst.right);
        if (!(mid > worst.left && mid < worst.right)) {
            stuck = true;
            break;
        }
        queue.erase(queue.begin());
        const QuadratureCell lo = integrate_cell(f, worst.left, mid, rule, cert);
        const QuadratureCell hi = integrate_cell(f, mid, worst.right, rule, cert);
        total += lo.bound + hi.bound - worst.bound;
        queue.insert(lo);
        queue.insert(hi);
    }

    QuadratureResult r;
    r.cert = cert;
    r.cells.assign(queue.begin(), queue.end());
    finish(r);
    r.converged = !stuck && r.error_bound <= tol;
    return r;
}

}  // namespace ostrowski
