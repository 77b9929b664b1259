#pragma once

#include "ostrowski/bounds.hpp"
#include "ostrowski/harness/corpus.hpp"
#include "ostrowski/harness/stieltjes.hpp"
#include "ostrowski/prob.hpp"
#include "ostrowski/pwm_function.hpp"
#include "ostrowski/tolerance.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace ostrowski::harness {

struct ChainViolation {
    std::string fn_id;
    double x = 0.0;
    std::optional<double> p;
    std::string member_pair;
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;

    friend bool operator<(const ChainViolation& l, const ChainViolation& r);
};

/// |S| <= int |u| dV <= V^(1/q) (int |u|^p dV)^(1/p) <= max|u| V
struct LemmaReport {
    StieltjesSum sum;
    double abs_integral = 0.0;
    double holder = 0.0;
    double sup_bound = 0.0;
    double numeric_error = 0.0;
    std::vector<ChainBreak> violations;
};

LemmaReport check_lemma_chain(const PiecewiseKernel& u, const PwmFunction& f,
                              const HolderExponent& h, std::size_t n, const Tolerance& tol = {});

/// (1/(b-a)) * sum K(x,.) df against rule - mean.
struct IdentityReport {
    double stieltjes_side = 0.0;
    double rule_side = 0.0;
    double slack = 0.0;
    bool holds = true;
};

IdentityReport check_parts_identity(const PwmFunction& f, double x, std::size_t n,
                                 const Tolerance& tol = {});

/// 65 evenly spaced points (or `m`) on [a, (a+b)/2] plus a, (3a+b)/4,
/// (a+b)/2 and every breakpoint of f folded into the left half.
std::vector<double> x_grid(const PwmFunction& f, std::size_t m);

struct VerifyConfig {
    CorpusConfig corpus;
    std::size_t cdf_count = 0;
    std::size_t grid = 65;
    std::vector<double> p_list{1.5, 2.0, 3.0, 4.0};
    std::size_t stieltjes_n = 4096;
    std::size_t identity_points = 9;
    Tolerance tol;
};

struct KernelTally {
    std::size_t cases = 0;
    std::size_t corrected_matches = 0;
    std::size_t nondegenerate = 0;
    std::size_t printed_mismatches = 0;
    double worst_corrected_error = 0.0;  ///< relative to the oracle
};

struct VerifySummary {
    std::size_t functions = 0;
    std::size_t cdfs = 0;
    std::size_t checks = 0;
    KernelTally kernel;
    std::vector<ChainViolation> violations;  ///< sorted
};

/// Every chain for one function: companion and Hölder chains on the x grid,
/// Stieltjes equivalence of Q and of the integer-p moments, the classical
/// bound over [a, b], the Stieltjes lemma chain and the integration-by-parts
/// identity.
void check_function(const PwmFunction& f, const std::string& id, const VerifyConfig& cfg,
                    VerifySummary& out);

/// Probability chains, T = Q, the direct T formula and the expectation
/// identity for one CDF (which is also run through check_function).
void check_cdf(const CdfModel& F, const std::string& id, const VerifyConfig& cfg,
               VerifySummary& out);

VerifySummary verify_corpus(const VerifyConfig& cfg);

}  // namespace ostrowski::harness
