#pragma once

#include <cmath>
#include <functional>
#include <memory>
#include <string>

#include "pastlife/support.hpp"

namespace pastlife {

/// Conditioning on events of probability below this threshold is refused:
/// dividing by such an F(t) or 1-F(t) amplifies numerical noise unboundedly.
inline constexpr double kMinConditioningProbability = 1e-10;

/// A lifetime law on a support contained in (0, +inf).
///
/// Implementations are immutable after construction and therefore safe for
/// concurrent reads from any number of threads.
class Distribution {
  public:
    virtual ~Distribution() = default;

    /// Density f(x). Must return 0 outside the support.
    virtual double pdf(double x) const = 0;

    /// Distribution function F(x), non-decreasing, 0 at lower, 1 at upper.
    virtual double cdf(double x) const = 0;

    /// Survival function 1 - F(x). Overridden where a cancellation-free
    /// closed form exists.
    virtual double sf(double x) const { return 1.0 - cdf(x); }

    /// Quantile function on (0, 1).
    virtual double quantile(double p) const = 0;

    /// log f(x); only called where pdf(x) > 0.
    virtual double log_pdf(double x) const { return std::log(pdf(x)); }

    virtual Support support() const = 0;

    virtual std::string name() const = 0;
};

using DistPtr = std::shared_ptr<const Distribution>;

/// Monotone bisection of a cdf, for laws without a closed-form quantile.
/// Resolves the root of cdf(x) = p to an interval of width 1e-12*(1+|x|).
double quantile_by_bisection(const std::function<double(double)>& cdf,
                             const Support& support, double p);

} // namespace pastlife
