#include "pastlife/builtins.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace pastlife {

namespace {

void require_positive(double v, const char* what) {
    if (!(v > 0.0)) {
        std::ostringstream os;
        os << what << " must be positive, got " << v;
        throw std::invalid_argument(os.str());
    }
}

std::string fmt(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

} // namespace

double quantile_by_bisection(const std::function<double(double)>& cdf,
                             const Support& support, double p) {
    if (!(p > 0.0 && p < 1.0))
        throw std::invalid_argument("quantile: p must lie in (0, 1)");

    double lo = support.lower;
    double hi = support.upper;
    if (!std::isfinite(hi)) {
        // Expand to a bracket first.
        hi = lo + 1.0;
        for (int i = 0; i < 2048 && cdf(hi) < p; ++i) hi = lo + 2.0 * (hi - lo);
    }
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (!(lo < mid && mid < hi)) break;
        if (cdf(mid) < p)
            lo = mid;
        else
            hi = mid;
        if (hi - lo <= 1e-12 * (1.0 + std::fabs(lo) + std::fabs(hi))) break;
    }
    return 0.5 * (lo + hi);
}

// ---------------------------------------------------------------- uniform

UniformDistribution::UniformDistribution(double b) : b_(b) {
    require_positive(b, "uniform: b");
}

double UniformDistribution::pdf(double x) const {
    return (x > 0.0 && x < b_) ? 1.0 / b_ : 0.0;
}

double UniformDistribution::cdf(double x) const {
    if (x <= 0.0) return 0.0;
    if (x >= b_) return 1.0;
    return x / b_;
}

double UniformDistribution::sf(double x) const {
    if (x <= 0.0) return 1.0;
    if (x >= b_) return 0.0;
    return (b_ - x) / b_;
}

double UniformDistribution::quantile(double p) const {
    if (!(p > 0.0 && p < 1.0))
        throw std::invalid_argument("uniform: quantile argument outside (0,1)");
    return p * b_;
}

double UniformDistribution::log_pdf(double) const { return -std::log(b_); }

std::string UniformDistribution::name() const { return "uniform(0," + fmt(b_) + ")"; }

// ------------------------------------------------------------ exponential

ExponentialDistribution::ExponentialDistribution(double lambda) : lambda_(lambda) {
    require_positive(lambda, "exponential: lambda");
}

double ExponentialDistribution::pdf(double x) const {
    return x > 0.0 ? lambda_ * std::exp(-lambda_ * x) : 0.0;
}

double ExponentialDistribution::cdf(double x) const {
    return x > 0.0 ? -std::expm1(-lambda_ * x) : 0.0;
}

double ExponentialDistribution::sf(double x) const {
    return x > 0.0 ? std::exp(-lambda_ * x) : 1.0;
}

double ExponentialDistribution::quantile(double p) const {
    if (!(p > 0.0 && p < 1.0))
        throw std::invalid_argument("exponential: quantile argument outside (0,1)");
    return -std::log1p(-p) / lambda_;
}

double ExponentialDistribution::log_pdf(double x) const {
    return std::log(lambda_) - lambda_ * x;
}

Support ExponentialDistribution::support() const {
    return {0.0, std::numeric_limits<double>::infinity()};
}

std::string ExponentialDistribution::name() const {
    return "exponential(lambda=" + fmt(lambda_) + ")";
}

// ------------------------------------------------------------------ power

PowerDistribution::PowerDistribution(double k) : k_(k) {
    require_positive(k, "power: k");
}

double PowerDistribution::pdf(double x) const {
    return (x > 0.0 && x < 1.0) ? k_ * std::pow(x, k_ - 1.0) : 0.0;
}

double PowerDistribution::cdf(double x) const {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    return std::pow(x, k_);
}

double PowerDistribution::quantile(double p) const {
    if (!(p > 0.0 && p < 1.0))
        throw std::invalid_argument("power: quantile argument outside (0,1)");
    return std::pow(p, 1.0 / k_);
}

double PowerDistribution::log_pdf(double x) const {
    return std::log(k_) + (k_ - 1.0) * std::log(x);
}

std::string PowerDistribution::name() const { return "power(k=" + fmt(k_) + ")"; }

// ---------------------------------------------------------------- weibull

WeibullDistribution::WeibullDistribution(double shape, double scale)
    : shape_(shape), scale_(scale) {
    require_positive(shape, "weibull: shape");
    require_positive(scale, "weibull: scale");
}

double WeibullDistribution::pdf(double x) const {
    if (!(x > 0.0)) return 0.0;
    const double z = x / scale_;
    return (shape_ / scale_) * std::pow(z, shape_ - 1.0) * std::exp(-std::pow(z, shape_));
}

double WeibullDistribution::cdf(double x) const {
    if (!(x > 0.0)) return 0.0;
    return -std::expm1(-std::pow(x / scale_, shape_));
}

double WeibullDistribution::sf(double x) const {
    if (!(x > 0.0)) return 1.0;
    return std::exp(-std::pow(x / scale_, shape_));
}

double WeibullDistribution::quantile(double p) const {
    if (!(p > 0.0 && p < 1.0))
        throw std::invalid_argument("weibull: quantile argument outside (0,1)");
    return scale_ * std::pow(-std::log1p(-p), 1.0 / shape_);
}

double WeibullDistribution::log_pdf(double x) const {
    const double z = x / scale_;
    return std::log(shape_ / scale_) + (shape_ - 1.0) * std::log(z) - std::pow(z, shape_);
}

Support WeibullDistribution::support() const {
    return {0.0, std::numeric_limits<double>::infinity()};
}

std::string WeibullDistribution::name() const {
    return "weibull(shape=" + fmt(shape_) + ",scale=" + fmt(scale_) + ")";
}

// ----------------------------------------------------------------- factory

DistPtr make_builtin(const std::string& family, const std::vector<double>& params) {
    const auto arity = [&](std::size_t lo, std::size_t hi) {
        if (params.size() < lo || params.size() > hi) {
            std::ostringstream os;
            os << "family '" << family << "' expects " << lo;
            if (hi != lo) os << ".." << hi;
            os << " parameter(s), got " << params.size();
            throw std::invalid_argument(os.str());
        }
    };

    if (family == "uniform") {
        arity(1, 1);
        return std::make_shared<UniformDistribution>(params[0]);
    }
    if (family == "exponential") {
        arity(1, 1);
        return std::make_shared<ExponentialDistribution>(params[0]);
    }
    if (family == "power") {
        arity(1, 1);
        return std::make_shared<PowerDistribution>(params[0]);
    }
    if (family == "weibull") {
        arity(1, 2);
        return std::make_shared<WeibullDistribution>(params[0],
                                                     params.size() > 1 ? params[1] : 1.0);
    }
    throw std::invalid_argument("unknown distribution family '" + family + "'");
}

} // namespace pastlife
