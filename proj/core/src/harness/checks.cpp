#include "ostrowski/harness/checks.hpp"

#include "ostrowski/error.hpp"
#include "ostrowski/harness/discrepancy.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <tuple>

namespace ostrowski::harness {

bool operator<(const ChainViolation& l, const ChainViolation& r) {
    const double lp = l.p.value_or(-1.0);
    const double rp = r.p.value_or(-1.0);
    return std::tie(l.fn_id, l.x, lp, l.member_pair) < std::tie(r.fn_id, r.x, rp, r.member_pair);
}

namespace {

// error on y^(1/p) given an error e on y
double root_error(double y, double e, double p) {
    if (e <= 0.0) {
        return 0.0;
    }
    if (y > 2.0 * e) {
        return e * std::pow(y - e, 1.0 / p - 1.0) / p;
    }
    return std::pow(3.0 * e, 1.0 / p);
}

void push_break(std::vector<ChainBreak>& out, const char* pair, double lhs, double rhs,
                double slack) {
    if (lhs > rhs + slack) {
        out.push_back({pair, lhs, rhs, slack});
    }
}

LemmaReport lemma_from_sum(const PiecewiseKernel& u, const PwmFunction& f, const StieltjesSum& s,
                           const StieltjesIntegral& i1, const HolderExponent& h,
                           const Tolerance& tol) {
    LemmaReport r;
    r.sum = s;
    const double V = f.total_variation();
    const StieltjesIntegral ip = weighted_variation_integral(WeightFunction::abs_power(u, h.p()), f);
    r.abs_integral = i1.value;
    r.sup_bound = u.sup_abs() * V;
    const double vq = std::pow(V, 1.0 / h.q());
    r.holder = vq * std::pow(std::max(ip.value, 0.0), 1.0 / h.p());
    r.numeric_error = i1.error + vq * root_error(std::max(ip.value, 0.0), ip.error, h.p());
    const double slack = tol.slack(r.sup_bound) + r.numeric_error;
    push_break(r.violations, "sum<=abs_integral", std::abs(s.value), r.abs_integral, slack + s.slack);
    push_break(r.violations, "abs_integral<=holder", r.abs_integral, r.holder, slack);
    push_break(r.violations, "holder<=sup_bound", r.holder, r.sup_bound, slack);
    return r;
}

IdentityReport identity_from_sum(const CompanionBounds& cb, double x, const StieltjesSum& s,
                                 const Tolerance& tol) {
    const PwmFunction& f = cb.function();
    const double L = f.domain().length();
    IdentityReport r;
    r.stieltjes_side = s.value / L;
    r.rule_side = cb.rule(x) - f.integral_mean();
    r.slack = s.slack / L + tol.slack(f.total_variation());
    r.holds = std::abs(r.stieltjes_side - r.rule_side) <= r.slack;
    return r;
}

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

// cubic in (t-a)/(b-a) with coefficients in [-1, 1] derived from the id
PiecewiseKernel random_polynomial(const std::string& id, const Interval& iv) {
    std::uint64_t state = fnv1a(id);
    std::vector<double> c(4);
    const double inv = 1.0 / iv.length();
    double scale = 1.0;
    for (double& ck : c) {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        const double unit = static_cast<double>(state >> 11) * 0x1.0p-53;
        ck = (2.0 * unit - 1.0) * scale;
        scale *= inv;
    }
    return PiecewiseKernel::polynomial(Polynomial(std::move(c), iv.a()), iv);
}

void record(VerifySummary& out, const std::string& id, double x, std::optional<double> p,
            const std::vector<ChainBreak>& breaks) {
    ++out.checks;
    for (const ChainBreak& b : breaks) {
        out.violations.push_back({id, x, p, b.pair, b.lhs, b.rhs, b.slack});
    }
}

void record_one(VerifySummary& out, const std::string& id, double x, std::optional<double> p,
                const char* pair, double lhs, double rhs, double slack) {
    ++out.checks;
    if (!(std::abs(lhs - rhs) <= slack)) {
        out.violations.push_back({id, x, p, pair, lhs, rhs, slack});
    }
}

std::vector<double> uniform_left_half(const Interval& iv, std::size_t m) {
    std::vector<double> xs;
    const double a = iv.a();
    const double step = (iv.midpoint() - a) / static_cast<double>(std::max<std::size_t>(m, 2) - 1);
    for (std::size_t i = 0; i < std::max<std::size_t>(m, 2); ++i) {
        xs.push_back(a + step * static_cast<double>(i));
    }
    xs.back() = iv.midpoint();
    return xs;
}

}  // namespace

LemmaReport check_lemma_chain(const PiecewiseKernel& u, const PwmFunction& f,
                              const HolderExponent& h, std::size_t n, const Tolerance& tol) {
    const StieltjesSum s = stieltjes_sum(u, f, n);
    const StieltjesIntegral i1 = weighted_variation_integral(WeightFunction::abs_power(u, 1.0), f);
    return lemma_from_sum(u, f, s, i1, h, tol);
}

IdentityReport check_parts_identity(const PwmFunction& f, double x, std::size_t n,
                                 const Tolerance& tol) {
    const Interval& iv = f.domain();
    if (!iv.in_left_half(x)) {
        throw DomainError("identity check: x must lie in [a, (a+b)/2]");
    }
    const CompanionBounds cb(f, tol);
    return identity_from_sum(cb, x, stieltjes_sum(PiecewiseKernel::companion(x, iv), f, n), tol);
}

std::vector<double> x_grid(const PwmFunction& f, std::size_t m) {
    const Interval& iv = f.domain();
    std::vector<double> xs = uniform_left_half(iv, m);
    xs.push_back(iv.a());
    xs.push_back(iv.quarter());
    xs.push_back(iv.midpoint());
    for (double t : f.breakpoints()) {
        const double folded = iv.in_left_half(t) ? t : iv.reflect(t);
        if (iv.in_left_half(folded)) {
            xs.push_back(folded);
        }
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    return xs;
}

void check_function(const PwmFunction& f, const std::string& id, const VerifyConfig& cfg,
                    VerifySummary& out) {
    const Tolerance& tol = cfg.tol;
    const Interval& iv = f.domain();
    const double L = iv.length();
    const double V = f.total_variation();
    const CompanionBounds cb(f, tol);

    std::vector<HolderExponent> hs;
    for (double p : cfg.p_list) {
        hs.emplace_back(p);
    }

    for (double x : x_grid(f, cfg.grid)) {
        const BoundReport base = cb.report(x);
        record(out, id, x, std::nullopt, chain_breaks(base, tol));

        const PiecewiseKernel K = PiecewiseKernel::companion(x, iv);
        const StieltjesIntegral i1 = weighted_variation_integral(WeightFunction::abs_power(K, 1.0), f);
        record_one(out, id, x, std::nullopt, "q*(b-a)=stieltjes", base.q_bound * L, i1.value,
                   tol.slack(i1.value) + i1.error);

        for (const HolderExponent& h : hs) {
            record(out, id, x, h.p(), chain_breaks(cb.report(x, h), tol));
            if (h.is_integer() && h.p() >= 2.0) {
                const int p = static_cast<int>(h.p());
                const KernelDiscrepancy d = kernel_discrepancy_report(cb, x, p);
                KernelTally& k = out.kernel;
                ++k.cases;
                ++out.checks;
                if (d.corrected_matches) {
                    ++k.corrected_matches;
                } else {
                    out.violations.push_back({id, x, h.p(), "holder_moment=stieltjes", d.corrected,
                                              d.oracle, d.tolerance});
                }
                if (d.oracle != 0.0) {
                    k.worst_corrected_error = std::max(
                        k.worst_corrected_error, std::abs(d.corrected - d.oracle) / std::abs(d.oracle));
                }
                if (!d.degenerate) {
                    ++k.nondegenerate;
                    if (!d.printed_matches) {
                        ++k.printed_mismatches;
                    }
                }
            }
        }
    }

    // classical bound over the whole interval
    const double mean = f.integral_mean();
    std::vector<double> full;
    for (std::size_t i = 0; i < cfg.grid; ++i) {
        full.push_back(iv.a() + L * static_cast<double>(i) / static_cast<double>(cfg.grid - 1));
    }
    for (double t : f.breakpoints()) {
        full.push_back(t);
    }
    for (double x : full) {
        x = std::clamp(x, iv.a(), iv.b());
        const double lhs = std::abs(f(x) - mean);
        const double rhs = cb.ostrowski_bv(x);
        ++out.checks;
        if (lhs > rhs + tol.slack(V)) {
            out.violations.push_back({id, x, std::nullopt, "abs_dev<=ostrowski_bv", lhs, rhs,
                                      tol.slack(V)});
        }
    }

    // lemma chain and identity through one Stieltjes sum per kernel
    const auto lemma = [&](const PiecewiseKernel& u, double x, const StieltjesSum& s,
                           const char* tag) {
        const StieltjesIntegral i1 = weighted_variation_integral(WeightFunction::abs_power(u, 1.0), f);
        for (const HolderExponent& h : hs) {
            LemmaReport r = lemma_from_sum(u, f, s, i1, h, tol);
            ++out.checks;
            for (const ChainBreak& b : r.violations) {
                out.violations.push_back({id, x, h.p(), std::string(tag) + ":" + b.pair, b.lhs,
                                          b.rhs, b.slack});
            }
        }
    };
    for (double x : uniform_left_half(iv, cfg.identity_points)) {
        const PiecewiseKernel K = PiecewiseKernel::companion(x, iv);
        const StieltjesSum s = stieltjes_sum(K, f, cfg.stieltjes_n);
        lemma(K, x, s, "lemma_K");
        const IdentityReport r = identity_from_sum(cb, x, s, tol);
        ++out.checks;
        if (!r.holds) {
            out.violations.push_back({id, x, std::nullopt, "identity", r.stieltjes_side,
                                      r.rule_side, r.slack});
        }
    }
    const PiecewiseKernel u = random_polynomial(id, iv);
    lemma(u, iv.a(), stieltjes_sum(u, f, cfg.stieltjes_n), "lemma_poly");
}

void check_cdf(const CdfModel& F, const std::string& id, const VerifyConfig& cfg,
               VerifySummary& out) {
    const Tolerance& tol = cfg.tol;
    const PwmFunction& f = F.cdf();
    const Interval& iv = F.domain();
    const double L = iv.length();
    const double a = iv.a();
    const double b = iv.b();
    const double m = iv.midpoint();

    // E(X) straight from the distribution
    double direct = 0.0;
    for (const PolySegment& s : f.segments()) {
        direct += (s.poly.derivative() * Polynomial::linear_from(0.0)).integrate(s.left, s.right);
    }
    for (const Jump& j : f.jumps()) {
        direct += j.at * j.height;
    }
    const double E = expectation(F);
    record_one(out, id, a, std::nullopt, "expectation=direct", E, direct,
               tol.slack(std::max(std::abs(a), std::abs(b))));

    // integral of G(t) = F(a+b-t) - F(t) over [c, d] within [a, m]
    const auto G_int = [&](double c, double d) {
        return f.integral(iv.reflect(d), iv.reflect(c)) - f.integral(c, d);
    };

    std::vector<HolderExponent> hs;
    for (double p : cfg.p_list) {
        hs.emplace_back(p);
    }

    double prev_G = 0.0;
    bool first = true;
    for (double x : x_grid(f, cfg.grid)) {
        const ProbReport r = check_prob_chain(F, x, std::nullopt, tol);
        record(out, id, x, std::nullopt, r.violations);

        ++out.checks;
        const double q = q_bound(f, x);
        if (r.t_bound != q) {
            out.violations.push_back({id, x, std::nullopt, "t_bound=q_bound", r.t_bound, q, 0.0});
        }

        const double Gx = f.variation(x, iv.reflect(x));
        const double t_direct =
            (2.0 * (iv.quarter() - x) * Gx + G_int(a, x) - G_int(x, m)) / L;
        record_one(out, id, x, std::nullopt, "t_bound=direct", r.t_bound, t_direct, tol.slack(1.0));

        ++out.checks;
        if (!first && Gx > prev_G + tol.slack(1.0)) {
            out.violations.push_back({id, x, std::nullopt, "profile_nonincreasing", Gx, prev_G,
                                      tol.slack(1.0)});
        }
        prev_G = Gx;
        first = false;

        for (const HolderExponent& h : hs) {
            const ProbReport rh = check_prob_chain(F, x, h, tol);
            record(out, id, x, h.p(), rh.violations);
        }
    }
}

VerifySummary verify_corpus(const VerifyConfig& cfg) {
    cfg.corpus.validate();
    if (cfg.grid < 2 || cfg.identity_points < 2 || cfg.stieltjes_n == 0) {
        throw ArgumentError("verify: grid and identity points must be >= 2, stieltjes n >= 1");
    }
    VerifySummary out;
    const std::vector<PwmFunction> fns = gen_corpus(cfg.corpus);
    char buf[32];
    for (std::size_t i = 0; i < fns.size(); ++i) {
        std::snprintf(buf, sizeof buf, "fn-%06zu", i);
        check_function(fns[i], buf, cfg, out);
        ++out.functions;
    }
    CorpusConfig cc = cfg.corpus;
    cc.count = cfg.cdf_count;
    if (cc.count > 0) {
        const std::vector<CdfModel> cdfs = gen_cdf_corpus(cc);
        for (std::size_t i = 0; i < cdfs.size(); ++i) {
            std::snprintf(buf, sizeof buf, "cdf-%06zu", i);
            check_function(cdfs[i].cdf(), buf, cfg, out);
            check_cdf(cdfs[i], buf, cfg, out);
            ++out.cdfs;
        }
    }
    std::sort(out.violations.begin(), out.violations.end());
    return out;
}

}  // namespace ostrowski::harness
