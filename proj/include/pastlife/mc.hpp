#pragma once

#include <cstdint>
#include <utility>

#include "pastlife/measures.hpp"

namespace pastlife::mc {

/// Counter-based generator identity, recorded in output metadata.
inline constexpr const char* kRngAlgorithm = "splitmix64-counter";

struct MCConfig {
    std::int64_t n_samples = 1'000'000;
    std::uint64_t seed = 0;
    std::int64_t batch = 65536;
};

struct MCEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    std::int64_t n_effective = 0;
};

/// The i-th uniform variate of a stream: a pure function of (seed, stream, i),
/// so batches can be evaluated in any order, or in parallel, and still
/// reproduce the sequential result bit for bit. Values lie strictly in (0,1).
double uniform01(std::uint64_t seed, std::uint64_t stream, std::uint64_t i);

/// Monte Carlo estimates of the past entropy / past varentropy at ctx.t.
/// Sampling is exact-conditional: U uniform on (0, F(t)), X = quantile(U),
/// so every sample survives and n_effective = n_samples.
MCEstimate mc_past_entropy(const measures::PastContext& ctx, const MCConfig& cfg,
                           bool parallel = true);
MCEstimate mc_past_varentropy(const measures::PastContext& ctx, const MCConfig& cfg,
                              bool parallel = true);

/// Mean and variance of the inactivity time t - X | X <= t.
std::pair<MCEstimate, MCEstimate> mc_inactivity_moments(const measures::PastContext& ctx,
                                                        const MCConfig& cfg,
                                                        bool parallel = true);

} // namespace pastlife::mc
