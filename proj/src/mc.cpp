#include "pastlife/mc.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace pastlife::mc {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;
constexpr std::uint64_t kStreamSalt = 0x632BE59BD9B4E019ull;

// Streams keep the sample sets of different estimators disjoint.
constexpr std::uint64_t kStreamPastInfo = 1;
constexpr std::uint64_t kStreamInactivity = 2;

std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

void validate(const MCConfig& cfg) {
    if (cfg.n_samples < 1000)
        throw std::invalid_argument("mc: n_samples must be at least 1000");
    if (cfg.batch < 1) throw std::invalid_argument("mc: batch must be positive");
}

struct BatchSums {
    double s = 0.0;  // pass 1: sum of values
    double s2 = 0.0; // pass 2: sum of squared deviations
    double s4 = 0.0; // pass 2: sum of fourth-power deviations
};

// Two passes over regenerated samples: pass 1 for the mean, pass 2 for the
// centred second and fourth moments. Per-batch partials are always combined
// in batch order, which makes the parallel result identical to the serial
// one for a fixed seed.
template <class ValueFn>
void accumulate(const MCConfig& cfg, std::uint64_t stream, const ValueFn& value_of,
                bool parallel, double& mean_out, double& m2_out, double& m4_out) {
    const std::int64_t n = cfg.n_samples;
    const std::int64_t n_batches = (n + cfg.batch - 1) / cfg.batch;
    std::vector<BatchSums> partial(static_cast<std::size_t>(n_batches));

    const auto pass1 = [&](std::int64_t b) {
        const std::int64_t begin = b * cfg.batch;
        const std::int64_t end = std::min(n, begin + cfg.batch);
        double s = 0.0;
        for (std::int64_t i = begin; i < end; ++i)
            s += value_of(uniform01(cfg.seed, stream, static_cast<std::uint64_t>(i)));
        partial[static_cast<std::size_t>(b)].s = s;
    };

#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel)
#endif
    for (std::int64_t b = 0; b < n_batches; ++b) pass1(b);

    double total = 0.0;
    for (const BatchSums& p : partial) total += p.s;
    const double mean = total / static_cast<double>(n);

    const auto pass2 = [&](std::int64_t b) {
        const std::int64_t begin = b * cfg.batch;
        const std::int64_t end = std::min(n, begin + cfg.batch);
        double s2 = 0.0, s4 = 0.0;
        for (std::int64_t i = begin; i < end; ++i) {
            const double d =
                value_of(uniform01(cfg.seed, stream, static_cast<std::uint64_t>(i))) - mean;
            const double d2 = d * d;
            s2 += d2;
            s4 += d2 * d2;
        }
        partial[static_cast<std::size_t>(b)].s2 = s2;
        partial[static_cast<std::size_t>(b)].s4 = s4;
    };

#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel)
#endif
    for (std::int64_t b = 0; b < n_batches; ++b) pass2(b);

    double s2 = 0.0, s4 = 0.0;
    for (const BatchSums& p : partial) {
        s2 += p.s2;
        s4 += p.s4;
    }

    mean_out = mean;
    m2_out = s2 / static_cast<double>(n);
    m4_out = s4 / static_cast<double>(n);
}

MCEstimate mean_estimate(double mean, double m2, std::int64_t n) {
    MCEstimate e;
    e.mean = mean;
    e.std_error = std::sqrt(m2 * static_cast<double>(n) / static_cast<double>(n - 1)) /
                  std::sqrt(static_cast<double>(n));
    e.n_effective = n;
    return e;
}

MCEstimate variance_estimate(double m2, double m4, std::int64_t n) {
    MCEstimate e;
    e.mean = m2 * static_cast<double>(n) / static_cast<double>(n - 1);
    e.std_error = std::sqrt(std::max(m4 - m2 * m2, 0.0) / static_cast<double>(n));
    e.n_effective = n;
    return e;
}

} // namespace

double uniform01(std::uint64_t seed, std::uint64_t stream, std::uint64_t i) {
    const std::uint64_t state = (seed ^ (kStreamSalt * (stream + 1))) + (i + 1) * kGolden;
    const std::uint64_t bits = mix64(state) >> 11;
    return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
}

MCEstimate mc_past_entropy(const measures::PastContext& ctx, const MCConfig& cfg,
                           bool parallel) {
    validate(cfg);
    const Distribution& d = *ctx.dist;
    const double ft = ctx.ft;
    const double log_ft = std::log(ft);
    const auto info = [&](double u) {
        const double x = d.quantile(u * ft);
        return log_ft - d.log_pdf(x); // -log of the conditional density
    };
    double mean, m2, m4;
    accumulate(cfg, kStreamPastInfo, info, parallel, mean, m2, m4);
    return mean_estimate(mean, m2, cfg.n_samples);
}

MCEstimate mc_past_varentropy(const measures::PastContext& ctx, const MCConfig& cfg,
                              bool parallel) {
    validate(cfg);
    const Distribution& d = *ctx.dist;
    const double ft = ctx.ft;
    const double log_ft = std::log(ft);
    const auto info = [&](double u) {
        const double x = d.quantile(u * ft);
        return log_ft - d.log_pdf(x);
    };
    double mean, m2, m4;
    accumulate(cfg, kStreamPastInfo, info, parallel, mean, m2, m4);
    return variance_estimate(m2, m4, cfg.n_samples);
}

std::pair<MCEstimate, MCEstimate> mc_inactivity_moments(const measures::PastContext& ctx,
                                                        const MCConfig& cfg, bool parallel) {
    validate(cfg);
    const Distribution& d = *ctx.dist;
    const double ft = ctx.ft;
    const double t = ctx.t;
    const auto inactivity = [&](double u) { return t - d.quantile(u * ft); };
    double mean, m2, m4;
    accumulate(cfg, kStreamInactivity, inactivity, parallel, mean, m2, m4);
    return {mean_estimate(mean, m2, cfg.n_samples),
            variance_estimate(m2, m4, cfg.n_samples)};
}

} // namespace pastlife::mc
