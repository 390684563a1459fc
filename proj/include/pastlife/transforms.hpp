#pragma once

#include <functional>
#include <optional>
#include <string>

#include "pastlife/distribution.hpp"

namespace pastlife {

/// A strictly monotonic map together with the inverse and derivative the
/// caller supplies; nothing is differentiated symbolically. An explicit
/// image support is required when the base support is unbounded (phi cannot
/// be evaluated at infinity).
struct MonotonicSpec {
    std::function<double(double)> phi;
    std::function<double(double)> phi_inverse;
    std::function<double(double)> phi_prime;
    std::optional<Support> image;
    std::string label = "phi";
};

enum class MonotoneDirection { increasing, decreasing };

/// Y = aX + b with a > 0, b >= 0. Pure forwarding, no quadrature.
class LinearTransform final : public Distribution {
  public:
    LinearTransform(DistPtr base, double a, double b);
    double pdf(double x) const override;
    double cdf(double x) const override;
    double sf(double x) const override;
    double quantile(double p) const override;
    double log_pdf(double x) const override;
    Support support() const override;
    std::string name() const override;
    const Distribution& base() const { return *base_; }
    double a() const { return a_; }
    double b() const { return b_; }

  private:
    DistPtr base_;
    double a_, b_;
};

/// Y = phi(X) for a caller-supplied strictly monotonic phi. The triple is
/// validated on a 32-point probe grid (inverse round-trip and derivative
/// sign); inconsistent triples are rejected at construction.
class MonotonicTransform final : public Distribution {
  public:
    MonotonicTransform(DistPtr base, MonotonicSpec spec);
    double pdf(double x) const override;
    double cdf(double x) const override;
    double sf(double x) const override;
    double quantile(double p) const override;
    double log_pdf(double x) const override;
    Support support() const override { return image_; }
    std::string name() const override;
    const Distribution& base() const { return *base_; }
    MonotoneDirection direction() const { return direction_; }
    const MonotonicSpec& spec() const { return spec_; }

  private:
    DistPtr base_;
    MonotonicSpec spec_;
    MonotoneDirection direction_;
    Support image_;
};

/// Proportional reversed hazard family: F_a(t) = F(t)^a, so the reversed
/// hazard rate is a*q(t). a = n models the lifetime of n parallel units.
class PRHRFamily final : public Distribution {
  public:
    PRHRFamily(DistPtr base, double a);
    double pdf(double x) const override;
    double cdf(double x) const override;
    double sf(double x) const override;
    double quantile(double p) const override;
    double log_pdf(double x) const override;
    Support support() const override;
    std::string name() const override;
    const Distribution& base() const { return *base_; }
    DistPtr base_ptr() const { return base_; }
    double a() const { return a_; }

  private:
    DistPtr base_;
    double a_;
};

/// Inactivity time at t: the law of (t - X | X <= t) on (0, t). All
/// functions forward to the base law in closed form.
class InactivityTime final : public Distribution {
  public:
    InactivityTime(DistPtr base, double t);
    double pdf(double x) const override;
    double cdf(double x) const override;
    double quantile(double p) const override;
    double log_pdf(double x) const override;
    Support support() const override { return {0.0, t_}; }
    std::string name() const override;

  private:
    DistPtr base_;
    double t_;
    double ft_; // F(t), fixed at construction
};

DistPtr linear_transform(DistPtr base, double a, double b);
DistPtr monotonic_transform(DistPtr base, MonotonicSpec spec);
std::shared_ptr<const PRHRFamily> prhr(DistPtr base, double a);
DistPtr inactivity_time(DistPtr base, double t);

} // namespace pastlife
