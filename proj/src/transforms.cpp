#include "pastlife/transforms.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace pastlife {

namespace {

constexpr int kProbePoints = 32;

std::string fmt(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

} // namespace

// ----------------------------------------------------------------- linear

LinearTransform::LinearTransform(DistPtr base, double a, double b)
    : base_(std::move(base)), a_(a), b_(b) {
    if (!base_) throw std::invalid_argument("linear_transform: null base");
    if (!(a > 0.0)) throw std::invalid_argument("linear_transform: a must be > 0");
    if (!(b >= 0.0)) throw std::invalid_argument("linear_transform: b must be >= 0");
}

double LinearTransform::pdf(double x) const { return base_->pdf((x - b_) / a_) / a_; }

double LinearTransform::cdf(double x) const { return base_->cdf((x - b_) / a_); }

double LinearTransform::sf(double x) const { return base_->sf((x - b_) / a_); }

double LinearTransform::quantile(double p) const { return a_ * base_->quantile(p) + b_; }

double LinearTransform::log_pdf(double x) const {
    return base_->log_pdf((x - b_) / a_) - std::log(a_);
}

Support LinearTransform::support() const {
    const Support s = base_->support();
    const double hi = s.upper_is_finite() ? a_ * s.upper + b_
                                          : std::numeric_limits<double>::infinity();
    return {a_ * s.lower + b_, hi};
}

std::string LinearTransform::name() const {
    return base_->name() + "|linear(a=" + fmt(a_) + ",b=" + fmt(b_) + ")";
}

DistPtr linear_transform(DistPtr base, double a, double b) {
    return std::make_shared<LinearTransform>(std::move(base), a, b);
}

// -------------------------------------------------------------- monotonic

MonotonicTransform::MonotonicTransform(DistPtr base, MonotonicSpec spec)
    : base_(std::move(base)), spec_(std::move(spec)), direction_(MonotoneDirection::increasing) {
    if (!base_) throw std::invalid_argument("monotonic_transform: null base");
    if (!spec_.phi || !spec_.phi_inverse || !spec_.phi_prime)
        throw std::invalid_argument("monotonic_transform: phi, phi_inverse, phi_prime all required");

    // Probe grid at interior quantiles of the base law.
    double prev = 0.0;
    int rising = 0, falling = 0;
    for (int i = 1; i <= kProbePoints; ++i) {
        const double x = base_->quantile(double(i) / (kProbePoints + 1));
        const double y = spec_.phi(x);
        const double back = spec_.phi_inverse(y);
        if (!(std::fabs(back - x) <= 1e-8 * (1.0 + std::fabs(x)))) {
            std::ostringstream os;
            os << "monotonic_transform: phi_inverse(phi(x)) != x at x = " << x
               << " (got " << back << ")";
            throw std::invalid_argument(os.str());
        }
        if (i > 1) {
            if (y > prev)
                ++rising;
            else if (y < prev)
                ++falling;
        }
        prev = y;
    }
    if (rising > 0 && falling > 0)
        throw std::invalid_argument("monotonic_transform: phi is not monotonic on the probe grid");
    direction_ = falling > 0 ? MonotoneDirection::decreasing : MonotoneDirection::increasing;

    for (int i = 1; i <= kProbePoints; ++i) {
        const double x = base_->quantile(double(i) / (kProbePoints + 1));
        const double d = spec_.phi_prime(x);
        const bool ok = direction_ == MonotoneDirection::increasing ? d > 0.0 : d < 0.0;
        if (!ok) {
            std::ostringstream os;
            os << "monotonic_transform: phi_prime sign at x = " << x
               << " contradicts the detected "
               << (direction_ == MonotoneDirection::increasing ? "increasing" : "decreasing")
               << " direction";
            throw std::invalid_argument(os.str());
        }
    }

    if (spec_.image) {
        image_ = *spec_.image;
    } else {
        const Support s = base_->support();
        if (!s.upper_is_finite())
            throw std::invalid_argument(
                "monotonic_transform: unbounded base support requires an explicit image support");
        const double ya = spec_.phi(s.lower);
        const double yb = spec_.phi(s.upper);
        image_ = Support{std::min(ya, yb), std::max(ya, yb)};
    }
}

double MonotonicTransform::pdf(double y) const {
    if (!image_.contains_interior(y)) return 0.0;
    const double x = spec_.phi_inverse(y);
    const double d = std::fabs(spec_.phi_prime(x));
    return base_->pdf(x) / d;
}

double MonotonicTransform::cdf(double y) const {
    if (y <= image_.lower) return 0.0;
    if (y >= image_.upper) return 1.0;
    const double x = spec_.phi_inverse(y);
    return direction_ == MonotoneDirection::increasing ? base_->cdf(x) : base_->sf(x);
}

double MonotonicTransform::sf(double y) const {
    if (y <= image_.lower) return 1.0;
    if (y >= image_.upper) return 0.0;
    const double x = spec_.phi_inverse(y);
    return direction_ == MonotoneDirection::increasing ? base_->sf(x) : base_->cdf(x);
}

double MonotonicTransform::quantile(double p) const {
    return direction_ == MonotoneDirection::increasing
               ? spec_.phi(base_->quantile(p))
               : spec_.phi(base_->quantile(1.0 - p));
}

double MonotonicTransform::log_pdf(double y) const {
    const double x = spec_.phi_inverse(y);
    return base_->log_pdf(x) - std::log(std::fabs(spec_.phi_prime(x)));
}

std::string MonotonicTransform::name() const {
    return base_->name() + "|" + spec_.label;
}

DistPtr monotonic_transform(DistPtr base, MonotonicSpec spec) {
    return std::make_shared<MonotonicTransform>(std::move(base), std::move(spec));
}

// ------------------------------------------------------------------- prhr

PRHRFamily::PRHRFamily(DistPtr base, double a) : base_(std::move(base)), a_(a) {
    if (!base_) throw std::invalid_argument("prhr: null base");
    if (!(a > 0.0)) throw std::invalid_argument("prhr: a must be > 0");
}

double PRHRFamily::pdf(double x) const {
    const Support s = base_->support();
    if (!s.contains_interior(x)) return 0.0;
    const double f = base_->cdf(x);
    if (!(f > 0.0)) return 0.0;
    return a_ * std::pow(f, a_ - 1.0) * base_->pdf(x);
}

double PRHRFamily::cdf(double x) const { return std::pow(base_->cdf(x), a_); }

double PRHRFamily::sf(double x) const {
    const double f = base_->cdf(x);
    if (!(f > 0.0)) return 1.0;
    if (f >= 1.0) return 0.0;
    return -std::expm1(a_ * std::log(f));
}

double PRHRFamily::quantile(double p) const {
    if (!(p > 0.0 && p < 1.0))
        throw std::invalid_argument("prhr: quantile argument outside (0,1)");
    return base_->quantile(std::pow(p, 1.0 / a_));
}

double PRHRFamily::log_pdf(double x) const {
    const double f = base_->cdf(x);
    return std::log(a_) + (a_ - 1.0) * std::log(f) + base_->log_pdf(x);
}

Support PRHRFamily::support() const { return base_->support(); }

std::string PRHRFamily::name() const {
    return base_->name() + "|prhr(a=" + fmt(a_) + ")";
}

std::shared_ptr<const PRHRFamily> prhr(DistPtr base, double a) {
    return std::make_shared<PRHRFamily>(std::move(base), a);
}

// -------------------------------------------------------- inactivity time

InactivityTime::InactivityTime(DistPtr base, double t) : base_(std::move(base)), t_(t) {
    if (!base_) throw std::invalid_argument("inactivity_time: null base");
    const Support s = base_->support();
    if (!s.contains_interior(t))
        throw std::domain_error("inactivity_time: t must be interior to the support");
    ft_ = base_->cdf(t);
    if (!(ft_ >= kMinConditioningProbability))
        throw std::domain_error("inactivity_time: F(t) below the conditioning threshold");
}

double InactivityTime::pdf(double x) const {
    if (!(x > 0.0 && x < t_)) return 0.0;
    return base_->pdf(t_ - x) / ft_;
}

double InactivityTime::cdf(double x) const {
    if (x <= 0.0) return 0.0;
    if (x >= t_) return 1.0;
    return (ft_ - base_->cdf(t_ - x)) / ft_;
}

double InactivityTime::quantile(double p) const {
    if (!(p > 0.0 && p < 1.0))
        throw std::invalid_argument("inactivity_time: quantile argument outside (0,1)");
    return t_ - base_->quantile(ft_ * (1.0 - p));
}

double InactivityTime::log_pdf(double x) const {
    return base_->log_pdf(t_ - x) - std::log(ft_);
}

std::string InactivityTime::name() const {
    return base_->name() + "|inactivity(t=" + fmt(t_) + ")";
}

DistPtr inactivity_time(DistPtr base, double t) {
    return std::make_shared<InactivityTime>(std::move(base), t);
}

} // namespace pastlife
