#include "ostrowski/harness/corpus.hpp"

#include "ostrowski/error.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>

namespace ostrowski::harness {

namespace {

// std::uniform_*_distribution is implementation-defined; map the engine
// output by hand so corpora match across standard libraries.
class Rng {
public:
    Rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t kind) {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(stream),
                          static_cast<std::uint32_t>(stream >> 32),
                          static_cast<std::uint32_t>(kind)};
        engine_.seed(seq);
    }

    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    std::size_t below(std::size_t n) { return static_cast<std::size_t>(uniform() * n) % n; }
    bool chance(double p) { return uniform() < p; }

private:
    std::mt19937_64 engine_;
};

double binomial(int n, int k) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

/// Monotone polynomial on [left, right] from nondecreasing (or
/// nonincreasing) Bernstein control values.
Polynomial bernstein_piece(double left, double right, const std::vector<double>& control) {
    const int n = static_cast<int>(control.size()) - 1;
    const double h = right - left;
    std::vector<double> coeffs(control.size(), 0.0);
    double hpow = 1.0;
    for (int j = 0; j <= n; ++j) {
        double s = 0.0;
        for (int k = 0; k <= j; ++k) {
            s += ((j - k) % 2 == 0 ? 1.0 : -1.0) * binomial(j, k) * control[k];
        }
        coeffs[j] = binomial(n, j) * s / hpow;
        hpow *= h;
    }
    return Polynomial(std::move(coeffs), left);
}

std::vector<double> draw_breakpoints(Rng& rng, const CorpusConfig& cfg) {
    const Interval& iv = cfg.interval;
    const std::size_t nseg = 1 + rng.below(cfg.max_segments);
    const double len = iv.length();
    const double special[] = {iv.quarter(), iv.midpoint(), iv.reflect(iv.quarter())};

    std::vector<double> pts;
    for (std::size_t k = 0; k + 1 < nseg; ++k) {
        double t = iv.a() + len * rng.uniform(0.02, 0.98);
        if (rng.chance(0.12)) {
            t = special[rng.below(3)];
        } else if (!pts.empty() && rng.chance(0.15)) {
            t = iv.reflect(pts[rng.below(pts.size())]);
        }
        pts.push_back(t);
    }
    std::sort(pts.begin(), pts.end());
    const double gap = 0.01 * len;
    std::vector<double> kept;
    double last = iv.a();
    for (double t : pts) {
        if (t - last >= gap && iv.b() - t >= gap) {
            kept.push_back(t);
            last = t;
        }
    }
    kept.push_back(iv.b());
    return kept;
}

struct PieceOptions {
    bool increasing_only = false;
    bool allow_jumps = true;
    bool discrete = false;
};

std::optional<PwmFunction> draw_function(Rng& rng, const CorpusConfig& cfg, const PieceOptions& opt) {
    const Interval& iv = cfg.interval;
    const std::vector<double> rights = draw_breakpoints(rng, cfg);
    std::vector<Polynomial> polys;
    double left = iv.a();
    double value = opt.increasing_only ? 0.0 : rng.uniform(-1.0, 1.0);
    for (std::size_t i = 0; i < rights.size(); ++i) {
        const double right = rights[i];
        if (i > 0 && opt.allow_jumps && rng.chance(cfg.jump_probability)) {
            const double size = rng.uniform(0.1, 1.0);
            const double sign = opt.increasing_only || rng.chance(0.5) ? 1.0 : -1.0;
            value += sign * size;
        }
        int degree = 1 + static_cast<int>(rng.below(static_cast<std::size_t>(cfg.max_degree)));
        if (opt.discrete || rng.chance(0.05)) {
            degree = 0;
        }
        const double dir = opt.increasing_only || rng.chance(0.5) ? 1.0 : -1.0;
        const double scale = rng.uniform(0.2, 2.0);
        std::vector<double> control{value};
        for (int k = 1; k <= degree; ++k) {
            const double step = rng.chance(0.1) ? 0.0 : rng.uniform(0.0, 1.0) * scale / degree;
            control.push_back(control.back() + dir * step);
        }
        polys.push_back(bernstein_piece(left, right, control));
        // the evaluated end value, so continuous joins are exact
        value = polys.back()(right);
        left = right;
    }
    try {
        return PwmFunction(iv, rights, std::move(polys));
    } catch (const ValidationError&) {
        return std::nullopt;
    }
}

}  // namespace

void CorpusConfig::validate() const {
    if (count == 0) throw ArgumentError("corpus count must be positive");
    if (max_segments == 0) throw ArgumentError("max_segments must be positive");
    if (max_degree < 1 || max_degree > Polynomial::kMaxDegree) {
        throw ArgumentError("max_degree must lie in [1, 8]");
    }
    if (!(jump_probability >= 0.0 && jump_probability <= 1.0)) {
        throw ArgumentError("jump_probability must lie in [0, 1]");
    }
}

std::vector<PwmFunction> gen_corpus(const CorpusConfig& cfg) {
    cfg.validate();
    std::vector<PwmFunction> out;
    out.reserve(cfg.count);
    for (std::size_t i = 0; i < cfg.count; ++i) {
        Rng rng(cfg.seed, i, 0x66);
        for (;;) {
            if (auto f = draw_function(rng, cfg, {})) {
                out.push_back(std::move(*f));
                break;
            }
        }
    }
    return out;
}

std::vector<CdfModel> gen_cdf_corpus(const CorpusConfig& cfg) {
    cfg.validate();
    std::vector<CdfModel> out;
    out.reserve(cfg.count);
    const Interval& iv = cfg.interval;
    for (std::size_t i = 0; i < cfg.count; ++i) {
        Rng rng(cfg.seed, i, 0xCDF);
        const bool discrete = rng.chance(0.1);
        PieceOptions opt{true, true, discrete};
        CorpusConfig local = cfg;
        if (discrete) {
            local.jump_probability = 1.0;
            local.max_segments = std::max<std::size_t>(cfg.max_segments, 2);
        }
        for (;;) {
            auto f = draw_function(rng, local, opt);
            if (!f) continue;
            const double total = (*f)(iv.b()) - (*f)(iv.a());
            if (!(total > 0.0)) continue;
            // Normalise: F = (f - f(a)) / (f(b) - f(a)).
            std::vector<double> rights;
            std::vector<Polynomial> polys;
            const double base = (*f)(iv.a());
            const auto segs = f->segments();
            for (std::size_t k = 0; k < segs.size(); ++k) {
                const PolySegment& s = segs[k];
                rights.push_back(s.right);
                Polynomial q = (s.poly + (-base)) * (1.0 / total);
                if (k > 0 && s.poly(s.left) == segs[k - 1].poly(s.left)) {
                    q = q + (polys.back()(s.left) - q(s.left));
                }
                polys.push_back(std::move(q));
            }
            try {
                out.emplace_back(PwmFunction(iv, rights, std::move(polys)));
                break;
            } catch (const ValidationError&) {
                continue;
            }
        }
    }
    return out;
}

}  // namespace ostrowski::harness
