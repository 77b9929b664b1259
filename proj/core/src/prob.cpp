#include "ostrowski/prob.hpp"

#include "ostrowski/error.hpp"

#include <cmath>
#include <string>

namespace ostrowski {

CdfModel::CdfModel(PwmFunction cdf, double endpoint_tol) : cdf_(std::move(cdf)) {
    const Interval& iv = cdf_.domain();
    const double fa = cdf_(iv.a());
    const double fb = cdf_(iv.b());
    if (std::abs(fa) > endpoint_tol) {
        throw ValidationError("CDF invariant F(a) = 0 violated: F(a) = " + std::to_string(fa));
    }
    if (std::abs(fb - 1.0) > endpoint_tol) {
        throw ValidationError("CDF invariant F(b) = 1 violated: F(b) = " + std::to_string(fb));
    }
    const auto segs = cdf_.segments();
    for (std::size_t i = 0; i < segs.size(); ++i) {
        const PolySegment& s = segs[i];
        if (s.direction == Monotonicity::nonincreasing &&
            s.poly(s.left) - s.poly(s.right) > endpoint_tol) {
            throw ValidationError("CDF invariant 'nondecreasing' violated on segment " +
                                  std::to_string(i));
        }
    }
    for (const Jump& j : cdf_.jumps()) {
        if (j.height < -endpoint_tol) {
            throw ValidationError("CDF invariant 'nonnegative point mass' violated at t = " +
                                  std::to_string(j.at));
        }
    }
}

double expectation(const CdfModel& F) {
    const Interval& iv = F.domain();
    return iv.b() - F.cdf().integral(iv.a(), iv.b());
}

double t_bound(const CdfModel& F, double x) { return CompanionBounds(F.cdf()).q(x); }

double t_holder_bound(const CdfModel& F, double x, const HolderExponent& h) {
    return CompanionBounds(F.cdf()).q_holder(x, h);
}

ProbReport check_prob_chain(const CdfModel& F, double x, const std::optional<HolderExponent>& h,
                            const Tolerance& tol) {
    const Interval& iv = F.domain();
    const CompanionBounds cb(F.cdf(), tol);
    const double a = iv.a();
    const double len = iv.length();
    const double xr = iv.reflect(x);

    ProbReport r;
    r.x = x;
    r.expectation = expectation(F);
    r.t_bound = cb.q(x);
    r.lhs = std::abs(0.5 * (F(x) + F(xr)) - (iv.b() - r.expectation) / len);
    const double spread = F(xr) - F(x);
    r.middle = (2.0 * (iv.quarter() - x) * spread + (x - a)) / len;
    r.outer = 0.25 + std::abs(x - iv.quarter()) / len;

    const double slack = tol.slack(r.outer);
    auto check = [&](const char* pair, double lo, double hi, double s) {
        if (lo > hi + s) {
            r.violations.push_back({pair, lo, hi, s});
        }
    };
    check("lhs<=T", r.lhs, r.t_bound, slack);
    check("T<=middle", r.t_bound, r.middle, slack);
    check("middle<=outer", r.middle, r.outer, slack);

    if (h) {
        const double p = h->p();
        ProbHolderMembers hm;
        hm.p = p;
        hm.t_holder = cb.q_holder(x, *h);
        hm.enclosure = cb.q_holder_enclosure(x, *h);
        const double braced =
            (std::pow(iv.midpoint() - x, p) - std::pow(x - a, p)) * spread + std::pow(x - a, p);
        hm.middle = (braced <= 0.0 ? 0.0 : std::pow(braced, 1.0 / p)) / len;
        check("T<=T_holder", r.t_bound, hm.t_holder, slack + hm.enclosure);
        check("T_holder<=middle_holder", hm.t_holder, hm.middle, slack + hm.enclosure);
        check("middle_holder<=outer", hm.middle, r.outer, slack);
        r.holder = hm;
    }
    return r;
}

}  // namespace ostrowski
