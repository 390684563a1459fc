#pragma once

#include <string>
#include <vector>

#include "pastlife/distribution.hpp"

namespace pastlife {

/// Uniform law on (0, b).
class UniformDistribution final : public Distribution {
  public:
    explicit UniformDistribution(double b);
    double pdf(double x) const override;
    double cdf(double x) const override;
    double sf(double x) const override;
    double quantile(double p) const override;
    double log_pdf(double x) const override;
    Support support() const override { return {0.0, b_}; }
    std::string name() const override;
    double b() const { return b_; }

  private:
    double b_;
};

/// Exponential law with rate lambda.
class ExponentialDistribution final : public Distribution {
  public:
    explicit ExponentialDistribution(double lambda);
    double pdf(double x) const override;
    double cdf(double x) const override;
    double sf(double x) const override;
    double quantile(double p) const override;
    double log_pdf(double x) const override;
    Support support() const override;
    std::string name() const override;
    double lambda() const { return lambda_; }

  private:
    double lambda_;
};

/// Power law on (0, 1): F(x) = x^k, f(x) = k x^(k-1).
class PowerDistribution final : public Distribution {
  public:
    explicit PowerDistribution(double k);
    double pdf(double x) const override;
    double cdf(double x) const override;
    double quantile(double p) const override;
    double log_pdf(double x) const override;
    Support support() const override { return {0.0, 1.0}; }
    std::string name() const override;
    double k() const { return k_; }

  private:
    double k_;
};

/// Weibull law with shape k and scale sigma. Shape < 1 gives a density that
/// is not log-concave, which the bound checks rely on.
class WeibullDistribution final : public Distribution {
  public:
    WeibullDistribution(double shape, double scale = 1.0);
    double pdf(double x) const override;
    double cdf(double x) const override;
    double sf(double x) const override;
    double quantile(double p) const override;
    double log_pdf(double x) const override;
    Support support() const override;
    std::string name() const override;
    double shape() const { return shape_; }
    double scale() const { return scale_; }

  private:
    double shape_;
    double scale_;
};

/// Builds a member of the built-in zoo from a family name and positional
/// parameters: uniform(b), exponential(lambda), power(k), weibull(shape[,scale]).
DistPtr make_builtin(const std::string& family, const std::vector<double>& params);

} // namespace pastlife
