#include "ostrowski/bounds.hpp"

#include "ostrowski/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace ostrowski {

namespace {

void require_x(const Interval& iv, double x, const char* who) {
    if (!iv.in_left_half(x)) {
        throw DomainError(std::string(who) + ": x = " + std::to_string(x) +
                          " must lie in [a, (a+b)/2]");
    }
}

double signed_root(double value, double p) { return value <= 0.0 ? 0.0 : std::pow(value, 1.0 / p); }

}  // namespace

HolderExponent::HolderExponent(double p) : p_(p) {
    if (!std::isfinite(p) || !(p > 1.0)) {
        throw ArgumentError("Hölder exponent requires p > 1, got " + std::to_string(p));
    }
}

bool HolderExponent::is_integer() const noexcept { return p_ == std::floor(p_); }

double kernel_K(double x, double t, const Interval& iv) {
    require_x(iv, x, "kernel_K");
    if (!iv.contains(t)) {
        throw DomainError("kernel_K: t outside [a, b]");
    }
    if (t <= x) {
        return t - iv.a();
    }
    if (t <= iv.reflect(x)) {
        return t - iv.midpoint();
    }
    return t - iv.b();
}

double r_p_kernel(double x, double t, double p, const Interval& iv) {
    if (!(p > 1.0)) {
        throw DomainError("r_p_kernel: p must exceed 1");
    }
    require_x(iv, x, "r_p_kernel");
    if (!iv.in_left_half(t)) {
        throw DomainError("r_p_kernel: t must lie in [a, (a+b)/2]");
    }
    if (t <= x) {
        return std::pow(t - iv.a(), p - 1.0);
    }
    return std::pow(iv.midpoint() - t, p - 1.0);
}

double outer_bound(double x, double total_var, const Interval& iv) {
    require_x(iv, x, "outer_bound");
    if (!(total_var >= 0.0)) {
        throw ArgumentError("outer_bound: total variation must be >= 0");
    }
    return (0.25 + std::abs(x - iv.quarter()) / iv.length()) * total_var;
}

std::vector<ChainBreak> chain_breaks(const BoundReport& r, const Tolerance& tol) {
    std::vector<ChainBreak> out;
    const double slack = tol.slack(r.outer);
    auto check = [&](const char* pair, double lo, double hi, double s) {
        if (lo > hi + s) {
            out.push_back({pair, lo, hi, s});
        }
    };
    check("lhs<=q_bound", r.lhs, r.q_bound, slack);
    check("q_bound<=coarse", r.q_bound, r.coarse, slack);
    check("coarse<=outer", r.coarse, r.outer, slack);
    check("0<=q_bound", 0.0, r.q_bound, 0.0);
    if (r.holder) {
        const double hs = slack + r.holder->enclosure;
        check("q_bound<=q_holder", r.q_bound, r.holder->q_holder, hs);
        check("q_holder<=coarse_holder", r.holder->q_holder, r.holder->coarse_holder, hs);
        check("coarse_holder<=outer", r.holder->coarse_holder, r.outer, slack);
    }
    return out;
}

CompanionBounds::CompanionBounds(PwmFunction f, Tolerance tol)
    : f_(std::move(f)), tol_(tol), profile_(f_.variation_profile()), mean_(f_.integral_mean()) {}

void CompanionBounds::require_left_half(double x, const char* who) const {
    require_x(f_.domain(), x, who);
}

double CompanionBounds::rule(double x) const {
    require_left_half(x, "companion_rule");
    return 0.5 * (f_(x) + f_(f_.domain().reflect(x)));
}

double CompanionBounds::lhs(double x) const { return std::abs(rule(x) - mean_); }

double CompanionBounds::profile_at(double x) const {
    require_left_half(x, "profile_at");
    return f_.variation(x, f_.domain().reflect(x));
}

double CompanionBounds::q(double x) const {
    require_left_half(x, "q_bound");
    const Interval& iv = f_.domain();
    const double raw = 2.0 * (iv.quarter() - x) * profile_at(x) + profile_.integral(iv.a(), x) -
                       profile_.integral(x, iv.midpoint());
    // Q >= 0 is a theorem; a clearly negative value means the profile is wrong.
    const double noise = 1e-12 * iv.length() * f_.total_variation();
    if (raw < -noise) {
        throw ConsistencyError("q_bound: negative value " + std::to_string(raw / iv.length()));
    }
    return std::max(raw, 0.0) / iv.length();
}

double CompanionBounds::profile_moment(double c, double d, double anchor, double exponent) const {
    const auto breaks = profile_.breaks();
    const auto pieces = profile_.pieces();
    double sum = 0.0;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        const double lo = std::max(c, breaks[i]);
        const double hi = std::min(d, breaks[i + 1]);
        if (lo < hi) {
            sum += power_moment(pieces[i], anchor, exponent, lo, hi);
        }
    }
    return sum;
}

double CompanionBounds::holder_moment(double x, double p) const {
    require_left_half(x, "holder_moment");
    if (!(p > 1.0)) {
        throw ArgumentError("holder_moment: p must exceed 1");
    }
    const Interval& iv = f_.domain();
    const double a = iv.a();
    const double m = iv.midpoint();
    const double edge = (std::pow(m - x, p) - std::pow(x - a, p)) * profile_at(x);
    const double inner = profile_moment(a, x, a, p - 1.0);
    const double outer = profile_moment(x, m, m, p - 1.0);
    const double r = edge + p * (inner - outer);

    const double scale = std::pow(0.5 * iv.length(), p) * f_.total_variation();
    if (r < -1e-10 * scale) {
        throw ConsistencyError("holder_moment: negative braced quantity " + std::to_string(r) +
                               " (kernel/profile mismatch)");
    }
    return std::max(r, 0.0);
}

double CompanionBounds::moment_rounding(double x, double p) const {
    const Interval& iv = f_.domain();
    const double a = iv.a();
    const double m = iv.midpoint();
    const double v = f_.total_variation();
    // |edge| and both p-weighted profile moments are bounded by this magnitude.
    const double magnitude = 2.0 * (std::pow(m - x, p) + std::pow(x - a, p)) * v;
    return 64.0 * std::numeric_limits<double>::epsilon() * magnitude;
}

double CompanionBounds::q_holder(double x, const HolderExponent& h) const {
    const double r = holder_moment(x, h.p());
    const double v = f_.total_variation();
    if (v == 0.0) {
        return 0.0;
    }
    return std::pow(v, 1.0 / h.q()) * signed_root(r, h.p()) / f_.domain().length();
}

double CompanionBounds::q_holder_enclosure(double x, const HolderExponent& h) const {
    const double v = f_.total_variation();
    if (v == 0.0) {
        return 0.0;
    }
    const double p = h.p();
    const double r = holder_moment(x, p);
    const double dr = moment_rounding(x, p);
    // Perturbation of r^(1/p): mean-value bound away from zero, concavity near it.
    const double droot = r > 2.0 * dr ? dr * std::pow(r - dr, 1.0 / p - 1.0) / p
                                      : std::pow(3.0 * dr, 1.0 / p);
    return std::pow(v, 1.0 / h.q()) * droot / f_.domain().length();
}

double CompanionBounds::coarse(double x) const {
    require_left_half(x, "coarse_bound");
    const Interval& iv = f_.domain();
    const double xr = iv.reflect(x);
    const double w = x - iv.a();
    return (w * f_.variation(iv.a(), x) + (iv.midpoint() - x) * f_.variation(x, xr) +
            w * f_.variation(xr, iv.b())) /
           iv.length();
}

double CompanionBounds::coarse_holder(double x, const HolderExponent& h) const {
    require_left_half(x, "coarse_holder_bound");
    const Interval& iv = f_.domain();
    const double v = f_.total_variation();
    if (v == 0.0) {
        return 0.0;
    }
    const double p = h.p();
    const double xr = iv.reflect(x);
    const double w = std::pow(x - iv.a(), p);
    const double braced = w * f_.variation(iv.a(), x) +
                          std::pow(iv.midpoint() - x, p) * f_.variation(x, xr) +
                          w * f_.variation(xr, iv.b());
    return std::pow(v, 1.0 / h.q()) * signed_root(braced, p) / iv.length();
}

double CompanionBounds::outer(double x) const {
    return outer_bound(x, f_.total_variation(), f_.domain());
}

double CompanionBounds::ostrowski_bv(double x) const {
    const Interval& iv = f_.domain();
    if (!iv.contains(x)) {
        throw DomainError("ostrowski_bv_bound: x outside [a, b]");
    }
    return (0.5 + std::abs(x - iv.midpoint()) / iv.length()) * f_.total_variation();
}

BoundReport CompanionBounds::report(double x, const std::optional<HolderExponent>& h) const {
    BoundReport r;
    r.x = x;
    r.rule = rule(x);
    r.mean = mean_;
    r.lhs = std::abs(r.rule - r.mean);
    r.q_bound = q(x);
    r.coarse = coarse(x);
    r.outer = outer(x);
    r.ostrowski_bv = ostrowski_bv(x);
    if (h) {
        r.holder = HolderMembers{h->p(), q_holder(x, *h), coarse_holder(x, *h),
                                 q_holder_enclosure(x, *h)};
    }
    return r;
}

double companion_rule(const PwmFunction& f, double x) {
    require_x(f.domain(), x, "companion_rule");
    return 0.5 * (f(x) + f(f.domain().reflect(x)));
}

double q_bound(const PwmFunction& f, double x) { return CompanionBounds(f).q(x); }

double q_holder_bound(const PwmFunction& f, double x, const HolderExponent& h) {
    return CompanionBounds(f).q_holder(x, h);
}

double coarse_bound(const PwmFunction& f, double x) { return CompanionBounds(f).coarse(x); }

double coarse_holder_bound(const PwmFunction& f, double x, const HolderExponent& h) {
    return CompanionBounds(f).coarse_holder(x, h);
}

double ostrowski_bv_bound(const PwmFunction& f, double x) {
    const Interval& iv = f.domain();
    if (!iv.contains(x)) {
        throw DomainError("ostrowski_bv_bound: x outside [a, b]");
    }
    return (0.5 + std::abs(x - iv.midpoint()) / iv.length()) * f.total_variation();
}

BoundReport chain_report(const PwmFunction& f, double x, const std::optional<HolderExponent>& h) {
    return CompanionBounds(f).report(x, h);
}

std::string to_string(SpecialCase c) {
    switch (c) {
    case SpecialCase::trapezoid_type: return "trapezoid_type";
    case SpecialCase::trapezoid: return "trapezoid";
    case SpecialCase::midpoint: return "midpoint";
    case SpecialCase::symmetric_endpoint: return "symmetric_endpoint";
    }
    return "unknown";
}

SpecialCase special_case_from_string(const std::string& s) {
    for (SpecialCase c : {SpecialCase::trapezoid_type, SpecialCase::trapezoid, SpecialCase::midpoint,
                          SpecialCase::symmetric_endpoint}) {
        if (to_string(c) == s) {
            return c;
        }
    }
    throw ArgumentError("unknown special case '" + s + "'");
}

SpecialCaseReport special_case_bounds(const PwmFunction& f, SpecialCase which,
                                      const std::optional<HolderExponent>& h,
                                      const Tolerance& tol) {
    const Interval& iv = f.domain();
    const double a = iv.a();
    const double m = iv.midpoint();
    const double len = iv.length();
    const double total = f.total_variation();

    if (which == SpecialCase::symmetric_endpoint &&
        !f.is_symmetric(tol.slack(std::abs(f(a)) + total))) {
        throw PreconditionError("symmetric_endpoint requires f(a+b-t) = f(t)");
    }

    double x = a;
    switch (which) {
    case SpecialCase::trapezoid_type: x = iv.quarter(); break;
    case SpecialCase::midpoint: x = m; break;
    case SpecialCase::trapezoid:
    case SpecialCase::symmetric_endpoint: x = a; break;
    }

    const CompanionBounds cb(f, tol);
    SpecialCaseReport out;
    out.which = which;
    out.report = cb.report(x, h);
    if (which == SpecialCase::symmetric_endpoint) {
        out.report.lhs = std::abs(f(a) - out.report.mean);
    }

    const PiecewisePoly& v = cb.profile();
    double holder_inner = 0.0;
    switch (which) {
    case SpecialCase::trapezoid_type:
        out.corollary_bound = (v.integral(a, x) - v.integral(x, m)) / len;
        if (h) {
            holder_inner = h->p() * (cb.profile_moment(a, x, a, h->p() - 1.0) -
                                     cb.profile_moment(x, m, m, h->p() - 1.0));
        }
        break;
    case SpecialCase::trapezoid:
    case SpecialCase::symmetric_endpoint:
        out.corollary_bound = 0.5 * total - v.integral(a, m) / len;
        if (h) {
            holder_inner = std::pow(0.5 * len, h->p()) * total -
                           h->p() * cb.profile_moment(a, m, m, h->p() - 1.0);
        }
        break;
    case SpecialCase::midpoint:
        out.corollary_bound = v.integral(a, m) / len;
        if (h) {
            holder_inner = h->p() * cb.profile_moment(a, m, a, h->p() - 1.0);
        }
        break;
    }

    const double scale = out.report.outer;
    if (std::abs(out.corollary_bound - out.report.q_bound) > tol.slack(scale)) {
        throw ConsistencyError(to_string(which) + ": Q = " + std::to_string(out.report.q_bound) +
                               " disagrees with the corollary form " +
                               std::to_string(out.corollary_bound));
    }
    if (h) {
        const double value =
            total == 0.0 ? 0.0 : std::pow(total, 1.0 / h->q()) * signed_root(holder_inner, h->p()) / len;
        out.corollary_holder = value;
        const double hs = tol.slack(scale) + out.report.holder->enclosure;
        if (std::abs(value - out.report.holder->q_holder) > hs) {
            throw ConsistencyError(to_string(which) + ": Hölder member " +
                                   std::to_string(out.report.holder->q_holder) +
                                   " disagrees with the corollary form " + std::to_string(value));
        }
    }
    return out;
}

}  // namespace ostrowski
