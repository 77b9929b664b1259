#pragma once

#include "ostrowski/interval.hpp"
#include "ostrowski/prob.hpp"
#include "ostrowski/pwm_function.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace ostrowski::harness {

/// Random corpus parameters. The same config always yields the same corpus,
/// and function i does not depend on `count`.
struct CorpusConfig {
    std::uint64_t seed = 1;
    std::size_t count = 1;
    std::size_t max_segments = 8;
    int max_degree = 3;
    double jump_probability = 0.3;
    Interval interval{0.0, 1.0};

    /// Throws ArgumentError on out-of-range fields.
    void validate() const;
};

/// Functions with random breakpoints (some snapped onto (3a+b)/4, (a+b)/2,
/// (a+3b)/4 or onto reflections of other breakpoints), random monotone
/// pieces in either direction and random jumps.
std::vector<PwmFunction> gen_corpus(const CorpusConfig& cfg);

/// Normalised CDFs: nondecreasing pieces, nonnegative point masses, and a
/// share of purely discrete distributions.
std::vector<CdfModel> gen_cdf_corpus(const CorpusConfig& cfg);

}  // namespace ostrowski::harness
