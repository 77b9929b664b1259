#pragma once

#include "ostrowski/harness/corpus.hpp"
#include "ostrowski/pwm_function.hpp"

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <vector>

namespace testutil {

using ostrowski::Interval;
using ostrowski::Polynomial;
using ostrowski::PwmFunction;

/// Segments given as (right, coefficients in powers of t).
inline PwmFunction make(Interval iv,
                        std::initializer_list<std::pair<double, std::vector<double>>> segs) {
    std::vector<double> rights;
    std::vector<Polynomial> polys;
    for (const auto& [r, c] : segs) {
        rights.push_back(r);
        polys.emplace_back(c);
    }
    return PwmFunction(iv, rights, std::move(polys));
}

inline PwmFunction identity() { return make({0, 1}, {{1.0, {0, 1}}}); }
inline PwmFunction square() { return make({0, 1}, {{1.0, {0, 0, 1}}}); }
inline PwmFunction step_at(double s) { return make({0, 1}, {{s, {0}}, {1.0, {1}}}); }
inline PwmFunction constant(double c) { return PwmFunction::constant({0, 1}, c); }

inline std::vector<PwmFunction> corpus(std::uint64_t seed, std::size_t n, int max_degree = 3,
                                       double jump_p = 0.3, Interval iv = {0, 1}) {
    ostrowski::harness::CorpusConfig cfg;
    cfg.seed = seed;
    cfg.count = n;
    cfg.max_degree = max_degree;
    cfg.jump_probability = jump_p;
    cfg.interval = iv;
    return ostrowski::harness::gen_corpus(cfg);
}

/// Sum of |increments| over a fine grid refined through every breakpoint,
/// with left limits inserted just before each breakpoint. The jump at c is
/// excluded and the jump at d included.
inline double brute_variation(const PwmFunction& f, double c, double d, int n = 20000) {
    std::vector<double> ts;
    for (int i = 0; i <= n; ++i) {
        ts.push_back(i == n ? d : c + (d - c) * i / n);
    }
    for (double b : f.breakpoints()) {
        if (b > c && b <= d) {
            ts.push_back(b);
        }
    }
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    double total = 0.0;
    double prev = f(c);
    const auto bks = f.breakpoints();
    for (std::size_t i = 1; i < ts.size(); ++i) {
        const double t = ts[i];
        if (std::find(bks.begin(), bks.end(), t) != bks.end()) {
            const double l = f.left_limit(t);
            total += std::abs(l - prev);
            prev = l;
        }
        const double v = f(t);
        total += std::abs(v - prev);
        prev = v;
    }
    return total;
}

/// Composite Simpson between breakpoints.
template <class F>
double simpson(F&& g, double c, double d, int n = 2000) {
    const double h = (d - c) / n;
    double s = g(c) + g(d);
    for (int i = 1; i < n; ++i) {
        s += (i % 2 ? 4.0 : 2.0) * g(c + i * h);
    }
    return s * h / 3.0;
}

inline double brute_integral(const PwmFunction& f, double c, double d) {
    std::vector<double> cuts{c};
    for (double b : f.breakpoints()) {
        if (b > c && b < d) {
            cuts.push_back(b);
        }
    }
    cuts.push_back(d);
    double s = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double lo = cuts[i];
        const double hi = cuts[i + 1];
        // evaluate the piece that owns (lo, hi) so the right endpoint is the left limit
        const auto& seg = f.segments()[f.segment_index(0.5 * (lo + hi))];
        s += simpson([&](double t) { return seg.poly(t); }, lo, hi, 200);
    }
    return s;
}

}  // namespace testutil
