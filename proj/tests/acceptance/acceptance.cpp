// One PASS/FAIL line per criterion, with the measured runtime.

#include "ostrowski/bounds.hpp"
#include "ostrowski/harness/checks.hpp"
#include "ostrowski/harness/corpus.hpp"
#include "ostrowski/harness/sharpness.hpp"
#include "ostrowski/harness/stieltjes.hpp"
#include "ostrowski/prob.hpp"
#include "ostrowski/quadrature.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace ostrowski;
namespace h = ostrowski::harness;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

bool near(double a, double b, double tol = 1e-9) { return std::abs(a - b) <= tol; }

PwmFunction poly_fn(std::vector<double> c) {
    const double rights[] = {1.0};
    return PwmFunction(Interval(0, 1), rights, {Polynomial(std::move(c))});
}

PwmFunction step_fn(double s) {
    const double rights[] = {s, 1.0};
    return PwmFunction(Interval(0, 1), rights, {Polynomial({0.0}), Polynomial({1.0})});
}

Outcome closed_form_case() {
    const PwmFunction f = poly_fn({0.0, 1.0});
    const BoundReport r = chain_report(f, 0.25, HolderExponent(2.0));
    const Interval iv(0, 1);
    const auto K = h::PiecewiseKernel::companion(0.25, iv);
    const double o1 = h::weighted_variation_integral(h::WeightFunction::abs_power(K, 1.0), f).value;
    const double o2 = h::weighted_variation_integral(h::WeightFunction::abs_power(K, 2.0), f).value;
    Outcome out;
    out.ok = near(r.lhs, 0.0) && near(r.q_bound, 0.125) && r.holder &&
             near(r.holder->q_holder, std::sqrt(1.0 / 48.0)) && near(r.coarse, 0.25) &&
             near(r.holder->coarse_holder, 0.25) && near(r.outer, 0.25) && near(o1, 0.125) &&
             near(std::sqrt(o2), r.holder->q_holder);
    char buf[160];
    std::snprintf(buf, sizeof buf, "q=%.10g q_holder=%.10g coarse=%.10g outer=%.10g oracle=%.10g",
                  r.q_bound, r.holder ? r.holder->q_holder : -1.0, r.coarse, r.outer, o1);
    out.detail = buf;
    return out;
}

Outcome constants_case() {
    Outcome out;
    for (const PwmFunction& f : {poly_fn({0.0, 1.0}), poly_fn({0.0, 0.0, 3.0}), step_fn(0.3)}) {
        const Interval& iv = f.domain();
        const double V = f.total_variation();
        out.ok = out.ok && CompanionBounds(f).outer(iv.quarter()) == 0.25 * V &&
                 ostrowski_bv_bound(f, iv.midpoint()) == 0.5 * V;
    }
    double worst = 1.0;
    for (h::SharpnessFamily fam : {h::SharpnessFamily::outer_quarter, h::SharpnessFamily::midpoint_half,
                                   h::SharpnessFamily::trapezoid_type_quarter}) {
        double prev = 0.0;
        for (double eps : {0.1, 0.05, 0.01, 0.001}) {
            const double r = h::sharpness_probe(fam, eps).ratio;
            out.ok = out.ok && r > prev;
            prev = r;
        }
        out.ok = out.ok && prev >= 0.99;
        worst = std::min(worst, prev);
    }
    char buf[96];
    std::snprintf(buf, sizeof buf, "min ratio at eps=0.001: %.6f", worst);
    out.detail = buf;
    return out;
}

h::VerifySummary corpus_summary;

Outcome property_suite() {
    h::VerifyConfig cfg;
    cfg.corpus.seed = 1;
    cfg.corpus.count = 1000;
    cfg.cdf_count = 200;
    corpus_summary = h::verify_corpus(cfg);
    Outcome out;
    out.ok = corpus_summary.violations.empty() && corpus_summary.functions == 1000 &&
             corpus_summary.cdfs == 200;
    out.detail = std::to_string(corpus_summary.functions) + " functions + " +
                 std::to_string(corpus_summary.cdfs) + " cdfs, " +
                 std::to_string(corpus_summary.checks) + " checks, " +
                 std::to_string(corpus_summary.violations.size()) + " violations";
    if (!corpus_summary.violations.empty()) {
        const auto& v = corpus_summary.violations.front();
        out.detail += "; first: " + v.fn_id + " " + v.member_pair;
    }
    return out;
}

Outcome kernel_adjudication() {
    // tallied during the property suite, p in {2, 3, 4} on every grid point
    const h::KernelTally& k = corpus_summary.kernel;
    Outcome out;
    const double share = k.nondegenerate ? static_cast<double>(k.printed_mismatches) /
                                               static_cast<double>(k.nondegenerate)
                                         : 0.0;
    out.ok = k.cases > 0 && k.corrected_matches == k.cases && share >= 0.99;
    char buf[240];
    std::snprintf(buf, sizeof buf,
                  "tallied during criterion 3: corrected %zu/%zu (worst rel err %.2e); printed mismatches %zu/%zu non-degenerate (%.4f)",
                  k.corrected_matches, k.cases, k.worst_corrected_error, k.printed_mismatches,
                  k.nondegenerate, share);
    out.detail = buf;
    return out;
}

Outcome quadrature_case() {
    const PwmFunction sq = poly_fn({0.0, 0.0, 1.0});
    const double truth = 1.0 / 3.0;
    const QuadratureResult r = composite_integrate(sq, 2, CellRule(0.25), Certification::refined);
    const QuadratureResult c = composite_integrate(sq, 2, CellRule(0.25), Certification::coarse);
    const double err = std::abs(r.estimate - truth);
    Outcome out;
    out.ok = near(r.estimate, 21.0 / 64.0, 1e-15) && near(r.error_bound, 1.0 / 16.0, 1e-15) &&
             near(c.error_bound, 1.0 / 8.0, 1e-15) && err <= r.error_bound && err <= c.error_bound;
    const QuadratureResult a = adaptive_integrate(sq, 1e-4);
    out.ok = out.ok && a.converged && a.error_bound <= 1e-4 &&
             std::abs(a.estimate - truth) <= a.error_bound;

    h::CorpusConfig cfg;
    cfg.seed = 5;
    cfg.count = 1000;
    cfg.jump_probability = 0.0;
    std::size_t runs = 0;
    std::size_t sound = 0;
    for (const PwmFunction& f : h::gen_corpus(cfg)) {
        const double exact = f.integral(f.domain().a(), f.domain().b());
        for (std::size_t n : {1u, 2u, 4u, 8u, 16u}) {
            const QuadratureResult q = composite_integrate(f, n);
            ++runs;
            sound += std::abs(q.estimate - exact) <= q.error_bound + 1e-12 * (1.0 + std::abs(exact));
        }
    }
    out.ok = out.ok && sound == runs;
    out.detail = "n=2 estimate " + std::to_string(r.estimate) + ", adaptive cells " +
                 std::to_string(a.cells.size()) + ", enclosures " + std::to_string(sound) + "/" +
                 std::to_string(runs);
    return out;
}

Outcome probability_case() {
    const CdfModel U(poly_fn({0.0, 1.0}));
    const ProbReport u = check_prob_chain(U, 0.25);
    const CdfModel P(step_fn(0.25));
    const ProbReport s = check_prob_chain(P, 0.0);
    Outcome out;
    out.ok = near(expectation(U), 0.5) && near(u.t_bound, 0.125) && near(u.outer, 0.25) &&
             near(s.t_bound, 0.25) && near(s.lhs, 0.25) && u.violations.empty() &&
             s.violations.empty();
    h::CorpusConfig cfg;
    cfg.seed = 1;
    cfg.count = 200;
    std::size_t points = 0;
    std::size_t equal = 0;
    for (const CdfModel& F : h::gen_cdf_corpus(cfg)) {
        for (double x : h::x_grid(F.cdf(), 65)) {
            ++points;
            equal += t_bound(F, x) == q_bound(F.cdf(), x);
        }
    }
    out.ok = out.ok && equal == points;
    out.detail = "E=" + std::to_string(expectation(U)) + " T(1/4)=" + std::to_string(u.t_bound) +
                 " T(0) point mass=" + std::to_string(s.t_bound) + ", T==Q on " +
                 std::to_string(equal) + "/" + std::to_string(points);
    return out;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        double limit_s;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {1, "closed-form chain for f(t)=t at x=1/4, p=2", 0.010, closed_form_case},
        {2, "exact constants and sharpness probes", 1.0, constants_case},
        {3, "zero chain violations over 1000 functions + 200 CDFs", 60.0, property_suite},
        {4, "kernel adjudication for p in {2,3,4}", 60.0, kernel_adjudication},
        {5, "certified quadrature", 10.0, quadrature_case},
        {6, "probability application", 1.0, probability_case},
    };
    int failures = 0;
    for (const Criterion& c : criteria) {
        Outcome o;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool pass = o.ok && secs <= c.limit_s;
        failures += !pass;
        std::printf("%s criterion %d: %s [%.3f s, limit %.3g s] %s\n", pass ? "PASS" : "FAIL", c.id,
                    c.name, secs, c.limit_s, o.detail.c_str());
    }
    return failures == 0 ? 0 : 1;
}
