#include "pastlife/measures.hpp"

#include <array>
#include <cmath>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "pastlife/builtins.hpp"
#include "pastlife/errors.hpp"

namespace pastlife::measures {

namespace {

using quadrature::integrate;
using quadrature::QuadratureResult;

constexpr double kEulerGamma = 0.5772156649015328606065120900824024;
constexpr double kPiSquaredOver6 = 1.6449340668482264364724151666460252;

// Internal x-space integrals run without the endpoint clip: every integrand
// below is already extended by 0 (or by a finite limit) where the density
// vanishes, and the open Kronrod rule never evaluates the endpoints.
QuadratureConfig xspace(QuadratureConfig cfg) {
    cfg.endpoint_clip = 0.0;
    return cfg;
}

// Estimated error of a non-closed-form value never reports as exactly zero:
// the roundoff floor of the evaluation itself is eps-scale.
double error_floor(double est, double value) {
    return std::max(est, std::numeric_limits<double>::epsilon() * (1.0 + std::fabs(value)));
}

MeasureValue quad_value(double value, double est) {
    return {value, error_floor(est, value), Method::quadrature};
}

MeasureValue gamma_value(double value, double est) {
    return {value, error_floor(est, value), Method::gamma_substitution};
}

QuadratureResult require_converged(const QuadratureResult& r, const char* what) {
    if (!r.converged) {
        std::ostringstream os;
        os << what << ": quadrature did not converge (error estimate "
           << r.error_estimate << " after " << r.subdivisions_used << " subdivisions)";
        throw convergence_error(os.str());
    }
    return r;
}

// f(x) log(f(x))^k extended by 0 where f vanishes; NaN propagates so that a
// broken density is reported with its abscissa rather than silently zeroed.
double f_logf_pow(const Distribution& d, double x, int k) {
    const double p = d.pdf(x);
    if (std::isnan(p)) return p;
    if (!(p > 0.0)) return 0.0;
    const double lp = d.log_pdf(x);
    double r = p;
    for (int i = 0; i < k; ++i) r *= lp;
    return r;
}

// (f/c) log(f/c)^k for the conditional-density routes.
double cond_logcond_pow(const Distribution& d, double x, double c, int k) {
    const double p = d.pdf(x);
    if (std::isnan(p)) return p;
    if (!(p > 0.0)) return 0.0;
    const double r = p / c;
    const double lr = d.log_pdf(x) - std::log(c);
    double out = r;
    for (int i = 0; i < k; ++i) out *= lr;
    return out;
}

// ------------------------------------------------- closed-form catalogue

struct ExpPastMoments {
    double h, v; // conditional entropy and varentropy of log-density
};

// For Exp(lambda): with u = lambda t, E = e^-u, F = 1 - e^-u,
//   H(tX) = 1 + log(F/lambda) - u E / F
//   V(tX) = 1 - u^2 E/F - u^2 (E/F)^2   (= lambda^2 Var(X | X <= t))
ExpPastMoments exp_past_moments(double lambda, double t) {
    const double u = lambda * t;
    const double e = std::exp(-u);
    const double f = -std::expm1(-u);
    const double r = e / f;
    ExpPastMoments m;
    m.h = 1.0 + std::log(f / lambda) - u * r;
    m.v = 1.0 - u * u * r - u * u * r * r;
    return m;
}

std::optional<double> closed_entropy(const Distribution& d) {
    if (auto* u = dynamic_cast<const UniformDistribution*>(&d)) return std::log(u->b());
    if (auto* e = dynamic_cast<const ExponentialDistribution*>(&d))
        return 1.0 - std::log(e->lambda());
    if (auto* p = dynamic_cast<const PowerDistribution*>(&d))
        return -std::log(p->k()) + (p->k() - 1.0) / p->k();
    if (auto* w = dynamic_cast<const WeibullDistribution*>(&d))
        return kEulerGamma * (1.0 - 1.0 / w->shape()) + std::log(w->scale() / w->shape()) + 1.0;
    return std::nullopt;
}

std::optional<double> closed_varentropy(const Distribution& d) {
    if (dynamic_cast<const UniformDistribution*>(&d)) return 0.0;
    if (dynamic_cast<const ExponentialDistribution*>(&d)) return 1.0;
    if (auto* p = dynamic_cast<const PowerDistribution*>(&d)) {
        const double c = (p->k() - 1.0) / p->k();
        return c * c;
    }
    if (auto* w = dynamic_cast<const WeibullDistribution*>(&d)) {
        const double c = (w->shape() - 1.0) / w->shape();
        return c * c * kPiSquaredOver6 + 1.0 - 2.0 * c;
    }
    return std::nullopt;
}

std::optional<double> closed_past_entropy(const Distribution& d, double t) {
    if (dynamic_cast<const UniformDistribution*>(&d)) return std::log(t);
    if (auto* e = dynamic_cast<const ExponentialDistribution*>(&d))
        return exp_past_moments(e->lambda(), t).h;
    if (auto* p = dynamic_cast<const PowerDistribution*>(&d))
        return std::log(t) - std::log(p->k()) + (p->k() - 1.0) / p->k();
    return std::nullopt;
}

std::optional<double> closed_past_varentropy(const Distribution& d, double t) {
    if (dynamic_cast<const UniformDistribution*>(&d)) return 0.0;
    if (auto* e = dynamic_cast<const ExponentialDistribution*>(&d))
        return exp_past_moments(e->lambda(), t).v;
    if (auto* p = dynamic_cast<const PowerDistribution*>(&d)) {
        const double c = (p->k() - 1.0) / p->k();
        return c * c;
    }
    return std::nullopt;
}

std::optional<double> closed_residual_entropy(const Distribution& d, double t) {
    if (auto* u = dynamic_cast<const UniformDistribution*>(&d)) return std::log(u->b() - t);
    if (auto* e = dynamic_cast<const ExponentialDistribution*>(&d))
        return 1.0 - std::log(e->lambda()); // memoryless
    return std::nullopt;
}

std::optional<double> closed_residual_varentropy(const Distribution& d, double) {
    if (dynamic_cast<const UniformDistribution*>(&d)) return 0.0;
    if (dynamic_cast<const ExponentialDistribution*>(&d)) return 1.0;
    return std::nullopt;
}

std::optional<double> closed_mean_inactivity(const Distribution& d, double t) {
    if (dynamic_cast<const UniformDistribution*>(&d)) return 0.5 * t;
    if (auto* e = dynamic_cast<const ExponentialDistribution*>(&d)) {
        const double f = -std::expm1(-e->lambda() * t);
        return t / f - 1.0 / e->lambda();
    }
    if (auto* p = dynamic_cast<const PowerDistribution*>(&d)) return t / (p->k() + 1.0);
    return std::nullopt;
}

std::optional<double> closed_variance_inactivity(const Distribution& d, double t) {
    if (dynamic_cast<const UniformDistribution*>(&d)) return t * t / 12.0;
    if (auto* e = dynamic_cast<const ExponentialDistribution*>(&d)) {
        const double l = e->lambda();
        return exp_past_moments(l, t).v / (l * l);
    }
    if (auto* p = dynamic_cast<const PowerDistribution*>(&d)) {
        const double k = p->k();
        return k * t * t / ((k + 1.0) * (k + 1.0) * (k + 2.0));
    }
    return std::nullopt;
}

} // namespace

std::string to_string(Method m) {
    switch (m) {
        case Method::closed_form: return "closed_form";
        case Method::quadrature: return "quadrature";
        case Method::gamma_substitution: return "gamma_substitution";
    }
    return "unknown";
}

PastContext::PastContext(const Distribution& d, double t_) : dist(&d), t(t_) {
    const Support s = d.support();
    if (!s.contains_interior(t))
        throw std::domain_error("past context: t must be interior to the support");
    ft = d.cdf(t);
    if (!(ft >= kMinConditioningProbability)) {
        std::ostringstream os;
        os << "past context: F(t) = " << ft << " is below the conditioning threshold "
           << kMinConditioningProbability;
        throw std::domain_error(os.str());
    }
}

// ----------------------------------------------------------- full-support

MeasureValue entropy(const Distribution& d, const QuadratureConfig& cfg) {
    if (auto v = closed_entropy(d)) return {*v, 0.0, Method::closed_form};
    const Support s = d.support();
    const auto i1 = require_converged(
        integrate([&d](double x) { return f_logf_pow(d, x, 1); }, s.lower, s.upper,
                  xspace(cfg)),
        "entropy");
    return quad_value(-i1.value, i1.error_estimate);
}

MeasureValue varentropy(const Distribution& d, const QuadratureConfig& cfg) {
    if (auto v = closed_varentropy(d)) return {*v, 0.0, Method::closed_form};
    const Support s = d.support();
    const auto i1 = require_converged(
        integrate([&d](double x) { return f_logf_pow(d, x, 1); }, s.lower, s.upper,
                  xspace(cfg)),
        "varentropy");
    const auto i2 = require_converged(
        integrate([&d](double x) { return f_logf_pow(d, x, 2); }, s.lower, s.upper,
                  xspace(cfg)),
        "varentropy");
    const double v = i2.value - i1.value * i1.value;
    const double err = i2.error_estimate + 2.0 * std::fabs(i1.value) * i1.error_estimate;
    return quad_value(v, err);
}

// ------------------------------------------------------------------- past

MeasureValue past_entropy(const PastContext& ctx, const QuadratureConfig& cfg,
                          PastRoute route) {
    const Distribution& d = *ctx.dist;
    if (route == PastRoute::automatic || route == PastRoute::closed_form_only) {
        if (auto v = closed_past_entropy(d, ctx.t)) return {*v, 0.0, Method::closed_form};
        if (route == PastRoute::closed_form_only)
            throw std::invalid_argument("past_entropy: no closed form for " + d.name());
    }
    const double lo = d.support().lower;
    if (route == PastRoute::conditional_density) {
        const double ft = ctx.ft;
        const auto j1 = require_converged(
            integrate([&d, ft](double x) { return cond_logcond_pow(d, x, ft, 1); }, lo,
                      ctx.t, xspace(cfg)),
            "past_entropy");
        return quad_value(-j1.value, j1.error_estimate);
    }
    // Decomposed route: H = -Lambda*(t) - (1/F) Int f log f, one integral.
    const double lam = -std::log(ctx.ft);
    const auto i1 = require_converged(
        integrate([&d](double x) { return f_logf_pow(d, x, 1); }, lo, ctx.t, xspace(cfg)),
        "past_entropy");
    return quad_value(-lam - i1.value / ctx.ft, i1.error_estimate / ctx.ft);
}

MeasureValue past_varentropy(const PastContext& ctx, const QuadratureConfig& cfg,
                             PastRoute route) {
    const Distribution& d = *ctx.dist;
    if (route == PastRoute::automatic || route == PastRoute::closed_form_only) {
        if (auto v = closed_past_varentropy(d, ctx.t)) return {*v, 0.0, Method::closed_form};
        if (route == PastRoute::closed_form_only)
            throw std::invalid_argument("past_varentropy: no closed form for " + d.name());
    }
    const double lo = d.support().lower;
    if (route == PastRoute::conditional_density) {
        const double ft = ctx.ft;
        const auto j1 = require_converged(
            integrate([&d, ft](double x) { return cond_logcond_pow(d, x, ft, 1); }, lo,
                      ctx.t, xspace(cfg)),
            "past_varentropy");
        const auto j2 = require_converged(
            integrate([&d, ft](double x) { return cond_logcond_pow(d, x, ft, 2); }, lo,
                      ctx.t, xspace(cfg)),
            "past_varentropy");
        const double v = j2.value - j1.value * j1.value;
        const double err =
            j2.error_estimate + 2.0 * std::fabs(j1.value) * j1.error_estimate;
        return quad_value(v, err);
    }
    // Raw-moment route: V = (1/F) Int f (log f)^2 - (Lambda* + H)^2 with
    // Lambda* + H = -(1/F) Int f log f.
    const auto i1 = require_converged(
        integrate([&d](double x) { return f_logf_pow(d, x, 1); }, lo, ctx.t, xspace(cfg)),
        "past_varentropy");
    const auto i2 = require_converged(
        integrate([&d](double x) { return f_logf_pow(d, x, 2); }, lo, ctx.t, xspace(cfg)),
        "past_varentropy");
    const double m1 = i1.value / ctx.ft;
    const double v = i2.value / ctx.ft - m1 * m1;
    const double err = i2.error_estimate / ctx.ft +
                       2.0 * std::fabs(m1) * i1.error_estimate / ctx.ft;
    return quad_value(v, err);
}

// --------------------------------------------------------------- residual

namespace {

double checked_sf(const Distribution& d, double t, const char* what) {
    const Support s = d.support();
    if (!(t >= s.lower) || !(t < s.upper))
        throw std::domain_error(std::string(what) + ": t outside [lower, upper)");
    const double fbar = d.sf(t);
    if (!(fbar >= kMinConditioningProbability))
        throw std::domain_error(std::string(what) +
                                ": survival at t below the conditioning threshold");
    return fbar;
}

} // namespace

MeasureValue residual_entropy(const Distribution& d, double t, const QuadratureConfig& cfg) {
    const double fbar = checked_sf(d, t, "residual_entropy");
    if (auto v = closed_residual_entropy(d, t)) return {*v, 0.0, Method::closed_form};
    const Support s = d.support();
    const auto i1 = require_converged(
        integrate([&d](double x) { return f_logf_pow(d, x, 1); }, t, s.upper, xspace(cfg)),
        "residual_entropy");
    return quad_value(-i1.value / fbar + std::log(fbar), i1.error_estimate / fbar);
}

MeasureValue residual_varentropy(const Distribution& d, double t,
                                 const QuadratureConfig& cfg) {
    const double fbar = checked_sf(d, t, "residual_varentropy");
    if (auto v = closed_residual_varentropy(d, t)) return {*v, 0.0, Method::closed_form};
    const Support s = d.support();
    const auto i1 = require_converged(
        integrate([&d](double x) { return f_logf_pow(d, x, 1); }, t, s.upper, xspace(cfg)),
        "residual_varentropy");
    const auto i2 = require_converged(
        integrate([&d](double x) { return f_logf_pow(d, x, 2); }, t, s.upper, xspace(cfg)),
        "residual_varentropy");
    const double m1 = i1.value / fbar;
    const double v = i2.value / fbar - m1 * m1;
    const double err =
        i2.error_estimate / fbar + 2.0 * std::fabs(m1) * i1.error_estimate / fbar;
    return quad_value(v, err);
}

// ---------------------------------------------------------------- hazards

double reversed_hazard(const Distribution& d, double t) {
    const double f = d.cdf(t);
    if (!(f > 0.0)) throw std::domain_error("reversed_hazard: F(t) = 0");
    return d.pdf(t) / f;
}

double cumulative_reversed_hazard(const Distribution& d, double t) {
    const double f = d.cdf(t);
    if (!(f > 0.0)) throw std::domain_error("cumulative_reversed_hazard: F(t) = 0");
    return -std::log(f);
}

double generalized_reversed_hazard(const Distribution& d, double t, double alpha) {
    const double f = d.cdf(t);
    if (!(f > 0.0)) throw std::domain_error("generalized_reversed_hazard: F(t) = 0");
    return d.pdf(t) / std::pow(f, 1.0 - alpha);
}

// ------------------------------------------------------- inactivity time

MeasureValue mean_inactivity_time(const PastContext& ctx, const QuadratureConfig& cfg) {
    const Distribution& d = *ctx.dist;
    if (auto v = closed_mean_inactivity(d, ctx.t)) return {*v, 0.0, Method::closed_form};
    const double lo = d.support().lower;
    const auto i = require_converged(
        integrate([&d](double x) { return d.cdf(x); }, lo, ctx.t, xspace(cfg)),
        "mean_inactivity_time");
    return quad_value(i.value / ctx.ft, i.error_estimate / ctx.ft);
}

MeasureValue variance_inactivity_time(const PastContext& ctx, const QuadratureConfig& cfg) {
    const Distribution& d = *ctx.dist;
    if (auto v = closed_variance_inactivity(d, ctx.t)) return {*v, 0.0, Method::closed_form};

    const double lo = d.support().lower;
    const double t = ctx.t;

    // Inner integral A(y) = Int_lo^y F, cached at 256 checkpoints; a request
    // finishes from the nearest checkpoint with one short adaptive call.
    constexpr int kCells = 256;
    const double h = (t - lo) / kCells;
    std::vector<double> checkpoints(kCells + 1, 0.0);
    double inner_err = 0.0;
    const auto cdf_fn = [&d](double x) { return d.cdf(x); };
    for (int j = 1; j <= kCells; ++j) {
        const auto cell =
            integrate(cdf_fn, lo + (j - 1) * h, lo + j * h, xspace(cfg));
        checkpoints[j] = checkpoints[j - 1] + cell.value;
        inner_err += cell.error_estimate;
    }
    const auto inner = [&](double y) {
        int j = static_cast<int>((y - lo) / h);
        if (j < 0) j = 0;
        if (j > kCells) j = kCells;
        const double yj = lo + j * h;
        double a = checkpoints[j];
        if (y > yj) a += integrate(cdf_fn, yj, y, xspace(cfg)).value;
        else if (y < yj) a -= integrate(cdf_fn, y, yj, xspace(cfg)).value;
        return a;
    };

    const auto outer = require_converged(integrate(inner, lo, t, xspace(cfg)),
                                         "variance_inactivity_time");
    const MeasureValue m = mean_inactivity_time(ctx, cfg);
    double v = 2.0 * outer.value / ctx.ft - m.value * m.value;
    const double err = 2.0 * (outer.error_estimate + inner_err * (t - lo)) / ctx.ft +
                       2.0 * std::fabs(m.value) * m.numerical_error;
    if (v < -1e-9 * std::max(1.0, m.value * m.value))
        throw convergence_error("variance_inactivity_time: negative variance beyond tolerance");
    if (v < 0.0) v = 0.0;
    return quad_value(v, err);
}

// ------------------------------------------------------------ derivatives

double past_entropy_derivative(const PastContext& ctx, const QuadratureConfig& cfg) {
    const double q = reversed_hazard(*ctx.dist, ctx.t);
    const MeasureValue h = past_entropy(ctx, cfg);
    return q * (1.0 - h.value - std::log(q));
}

double past_varentropy_derivative(const PastContext& ctx, const QuadratureConfig& cfg) {
    const double q = reversed_hazard(*ctx.dist, ctx.t);
    const MeasureValue h = past_entropy(ctx, cfg);
    const MeasureValue v = past_varentropy(ctx, cfg);
    const double s = h.value + std::log(q);
    return -q * (v.value - s * s);
}

// ------------------------------------------------------------------- prhr

namespace {

struct GammaIntegrals {
    QuadratureResult i1, i2;
    double y_top;
    double lambda_star_base;
};

// Substitution y = F(x)^a turns Int f_a (log f_a)^k dx into
// Int gamma(y)^k dy over (0, F(t)^a) with
// gamma(y) = log(a y^(1-1/a) f(Q(y^(1/a)))).
GammaIntegrals gamma_route(const PRHRFamily& fam, double t, const QuadratureConfig& cfg,
                           bool need_square) {
    const Distribution& base = fam.base();
    const Support s = base.support();
    if (!s.contains_interior(t))
        throw std::domain_error("prhr: t must be interior to the support");
    const double fbase = base.cdf(t);
    if (!(fbase > 0.0)) throw std::domain_error("prhr: F(t) = 0");
    const double a = fam.a();
    const double y_top = std::pow(fbase, a);
    if (!(y_top >= kMinConditioningProbability))
        throw std::domain_error("prhr: F(t)^a below the conditioning threshold");

    const auto gamma_fn = [&base, a](double y) {
        const double p = std::pow(y, 1.0 / a);
        const double x = base.quantile(p);
        return std::log(a) + (1.0 - 1.0 / a) * std::log(y) + base.log_pdf(x);
    };

    GammaIntegrals g;
    g.y_top = y_top;
    g.lambda_star_base = -std::log(fbase);
    g.i1 = require_converged(integrate(gamma_fn, 0.0, y_top, cfg), "prhr gamma route");
    if (need_square) {
        const auto gamma2 = [&gamma_fn](double y) {
            const double v = gamma_fn(y);
            return v * v;
        };
        g.i2 = require_converged(integrate(gamma2, 0.0, y_top, cfg), "prhr gamma route");
    }
    return g;
}

} // namespace

MeasureValue prhr_past_entropy(const PRHRFamily& fam, double t, const QuadratureConfig& cfg) {
    const auto g = gamma_route(fam, t, cfg, false);
    const double h = -fam.a() * g.lambda_star_base - g.i1.value / g.y_top;
    return gamma_value(h, g.i1.error_estimate / g.y_top);
}

MeasureValue prhr_past_varentropy(const PRHRFamily& fam, double t,
                                  const QuadratureConfig& cfg) {
    const auto g = gamma_route(fam, t, cfg, true);
    const double m1 = g.i1.value / g.y_top;
    const double v = g.i2.value / g.y_top - m1 * m1;
    const double err = g.i2.error_estimate / g.y_top +
                       2.0 * std::fabs(m1) * g.i1.error_estimate / g.y_top;
    return gamma_value(v, err);
}

// --------------------------------------------------------------- discrete

namespace {

// Kahan sums: validation at 1e-12 on vectors of up to 1e6 entries needs
// better than plain accumulation.
struct Kahan {
    double sum = 0.0, c = 0.0;
    void add(double v) {
        const double y = v - c;
        const double t = sum + y;
        c = (t - sum) - y;
        sum = t;
    }
};

void validate_pmf(std::span<const double> p) {
    Kahan total;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (!(p[i] >= 0.0)) {
            std::ostringstream os;
            os << "discrete: p[" << i << "] = " << p[i] << " is negative";
            throw std::invalid_argument(os.str());
        }
        total.add(p[i]);
    }
    if (std::fabs(total.sum - 1.0) > 1e-12) {
        std::ostringstream os;
        os << "discrete: probabilities sum to " << total.sum << ", not 1 within 1e-12";
        throw std::invalid_argument(os.str());
    }
}

} // namespace

double discrete_entropy(std::span<const double> p) {
    validate_pmf(p);
    Kahan h;
    for (double v : p)
        if (v > 0.0) h.add(-v * std::log(v)); // zero entries contribute exactly 0
    return h.sum;
}

double discrete_varentropy(std::span<const double> p) {
    validate_pmf(p);
    Kahan h, m2;
    for (double v : p) {
        if (v > 0.0) {
            const double lp = std::log(v);
            h.add(-v * lp);
            m2.add(v * lp * lp);
        }
    }
    return m2.sum - h.sum * h.sum;
}

// --------------------------------------------------------------- registry

namespace {

const std::array<std::string, 15> kMeasureNames = {
    "entropy",
    "varentropy",
    "past-entropy",
    "past-varentropy",
    "residual-entropy",
    "residual-varentropy",
    "reversed-hazard",
    "cumulative-reversed-hazard",
    "generalized-reversed-hazard",
    "mean-inactivity-time",
    "variance-inactivity-time",
    "past-entropy-derivative",
    "past-varentropy-derivative",
    "prhr-past-entropy",
    "prhr-past-varentropy",
};

MeasureValue scalar(double v) { return {v, 0.0, Method::closed_form}; }

const PRHRFamily& as_prhr(const Distribution& d, const std::string& measure) {
    if (auto* fam = dynamic_cast<const PRHRFamily*>(&d)) return *fam;
    throw std::invalid_argument("measure '" + measure +
                                "' requires a prhr stage at the top of the spec");
}

} // namespace

MeasureValue evaluate_by_name(const Distribution& d, const std::string& measure, double t,
                              const QuadratureConfig& cfg, double alpha) {
    if (measure == "entropy") return entropy(d, cfg);
    if (measure == "varentropy") return varentropy(d, cfg);
    if (measure == "past-entropy") return past_entropy(PastContext(d, t), cfg);
    if (measure == "past-varentropy") return past_varentropy(PastContext(d, t), cfg);
    if (measure == "residual-entropy") return residual_entropy(d, t, cfg);
    if (measure == "residual-varentropy") return residual_varentropy(d, t, cfg);
    if (measure == "reversed-hazard") return scalar(reversed_hazard(d, t));
    if (measure == "cumulative-reversed-hazard")
        return scalar(cumulative_reversed_hazard(d, t));
    if (measure == "generalized-reversed-hazard")
        return scalar(generalized_reversed_hazard(d, t, alpha));
    if (measure == "mean-inactivity-time")
        return mean_inactivity_time(PastContext(d, t), cfg);
    if (measure == "variance-inactivity-time")
        return variance_inactivity_time(PastContext(d, t), cfg);
    if (measure == "past-entropy-derivative") {
        const PastContext ctx(d, t);
        const double q = reversed_hazard(d, t);
        const MeasureValue h = past_entropy(ctx, cfg);
        return {q * (1.0 - h.value - std::log(q)), q * h.numerical_error, h.method};
    }
    if (measure == "past-varentropy-derivative") {
        const PastContext ctx(d, t);
        const double q = reversed_hazard(d, t);
        const MeasureValue h = past_entropy(ctx, cfg);
        const MeasureValue v = past_varentropy(ctx, cfg);
        const double s = h.value + std::log(q);
        const double err =
            q * (v.numerical_error + 2.0 * std::fabs(s) * h.numerical_error);
        const Method m = (h.method == Method::closed_form && v.method == Method::closed_form)
                             ? Method::closed_form
                             : Method::quadrature;
        return {-q * (v.value - s * s), m == Method::closed_form ? 0.0 : err, m};
    }
    if (measure == "prhr-past-entropy") return prhr_past_entropy(as_prhr(d, measure), t, cfg);
    if (measure == "prhr-past-varentropy")
        return prhr_past_varentropy(as_prhr(d, measure), t, cfg);
    throw std::invalid_argument("unknown measure '" + measure + "'");
}

std::span<const std::string> measure_names() {
    return {kMeasureNames.data(), kMeasureNames.size()};
}

} // namespace pastlife::measures
