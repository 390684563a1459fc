#include "pastlife/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace pastlife::quadrature {

namespace {

// Gauss 7 / Kronrod 15 abscissae (positive half, zero last) and weights.
constexpr std::array<double, 8> kNodes = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};

constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};

// Weights of the embedded 7-point Gauss rule; node i is Gaussian iff i is odd.
constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

struct Panel {
    double lo, hi;
    double value;
    double error;
    bool splittable = true;
};

using Fn = std::function<double(double)>;

[[noreturn]] void throw_nonfinite(double x, double v) {
    std::ostringstream os;
    os << "integrand returned non-finite value " << v << " at x = " << x;
    throw std::domain_error(os.str());
}

double eval_checked(const Fn& g, double x) {
    const double v = g(x);
    if (!std::isfinite(v)) throw_nonfinite(x, v);
    return v;
}

Panel gk15(const Fn& g, double lo, double hi) {
    const double c = 0.5 * (lo + hi);
    const double h = 0.5 * (hi - lo);

    const double fc = eval_checked(g, c);
    double kron = kKronrodWeights[7] * fc;
    double gauss = kGaussWeights[3] * fc;
    for (int i = 0; i < 7; ++i) {
        const double dx = h * kNodes[i];
        const double fs = eval_checked(g, c - dx) + eval_checked(g, c + dx);
        kron += kKronrodWeights[i] * fs;
        if (i % 2 == 1) gauss += kGaussWeights[i / 2] * fs;
    }

    Panel p;
    p.lo = lo;
    p.hi = hi;
    p.value = kron * h;
    p.error = std::fabs((kron - gauss) * h);
    return p;
}

// A panel too thin for its midpoint to separate from the endpoints cannot be
// refined further in double precision.
bool thin(double lo, double hi) {
    const double mid = 0.5 * (lo + hi);
    return !(lo < mid && mid < hi);
}

QuadratureResult integrate_finite(const Fn& g, double lo, double hi,
                                  const QuadratureConfig& cfg) {
    QuadratureResult res;

    std::vector<Panel> panels;
    panels.reserve(64);
    panels.push_back(gk15(g, lo, hi));

    double total = panels[0].value;
    double err = panels[0].error;
    int splits = 0;

    const auto tolerance = [&cfg](double v) {
        return std::max(cfg.abs_tol, cfg.rel_tol * std::fabs(v));
    };

    while (err > tolerance(total)) {
        if (splits >= cfg.max_subdivisions) break;

        std::size_t worst = panels.size();
        double worst_err = 0.0;
        for (std::size_t i = 0; i < panels.size(); ++i) {
            if (panels[i].splittable && panels[i].error > worst_err) {
                worst_err = panels[i].error;
                worst = i;
            }
        }
        if (worst == panels.size()) break; // nothing left to refine

        Panel old = panels[worst];
        if (thin(old.lo, old.hi)) {
            panels[worst].splittable = false;
            continue;
        }

        const double mid = 0.5 * (old.lo + old.hi);
        Panel left = gk15(g, old.lo, mid);
        Panel right = gk15(g, mid, old.hi);
        total += left.value + right.value - old.value;
        err += left.error + right.error - old.error;
        panels[worst] = left;
        panels.push_back(right);
        ++splits;
    }

    // Re-sum in abscissa order: deterministic and independent of the
    // refinement bookkeeping above.
    std::sort(panels.begin(), panels.end(),
              [](const Panel& a, const Panel& b) { return a.lo < b.lo; });
    double value = 0.0, error = 0.0;
    for (const Panel& p : panels) {
        value += p.value;
        error += p.error;
    }

    res.value = value;
    res.error_estimate = error;
    res.subdivisions_used = splits;
    res.converged = error <= tolerance(value);
    return res;
}

void validate(const QuadratureConfig& cfg) {
    if (!(cfg.abs_tol > 0.0) || !(cfg.rel_tol > 0.0))
        throw std::invalid_argument("quadrature: tolerances must be positive");
    if (cfg.max_subdivisions < 1)
        throw std::invalid_argument("quadrature: max_subdivisions must be >= 1");
    if (!(cfg.endpoint_clip >= 0.0) || !(cfg.endpoint_clip < 0.01))
        throw std::invalid_argument("quadrature: endpoint_clip must lie in [0, 0.01)");
}

} // namespace

QuadratureResult integrate(const Fn& g, double lo, double hi,
                           const QuadratureConfig& cfg) {
    validate(cfg);
    if (!(lo < hi))
        throw std::invalid_argument("quadrature: lo must be strictly below hi");
    if (!std::isfinite(lo))
        throw std::invalid_argument("quadrature: lower limit must be finite");

    if (std::isinf(hi)) {
        // x = lo + u/(1-u) maps (0,1) onto (lo, inf).
        const Fn mapped = [&g, lo](double u) {
            const double om = 1.0 - u;
            const double x = lo + u / om;
            return g(x) / (om * om);
        };
        QuadratureConfig inner = cfg;
        return integrate(mapped, 0.0, 1.0, inner);
    }

    if (cfg.endpoint_clip > 0.0) {
        const double delta = cfg.endpoint_clip * (hi - lo);
        const double a = lo + delta;
        const double b = hi - delta;
        QuadratureResult res = integrate_finite(g, a, b, cfg);
        // Slivers carry the boundary value, i.e. the integrand is extended
        // by its limit across the clipped region.
        res.value += delta * (eval_checked(g, a) + eval_checked(g, b));
        return res;
    }
    return integrate_finite(g, lo, hi, cfg);
}

double differentiate(const Fn& h, double t, double step_hint) {
    if (!(step_hint > 0.0))
        throw std::invalid_argument("differentiate: step_hint must be positive");
    const double step = step_hint * std::max(1.0, std::fabs(t));

    const auto central = [&](double s) {
        return (h(t + s) - h(t - s)) / (2.0 * s);
    };
    const double d1 = central(step);
    const double d2 = central(0.5 * step);
    const double r = (4.0 * d2 - d1) / 3.0;
    if (!std::isfinite(r)) {
        std::ostringstream os;
        os << "differentiate: non-finite difference quotient at t = " << t
           << " (step " << step << " may cross a domain boundary)";
        throw std::domain_error(os.str());
    }
    return r;
}

} // namespace pastlife::quadrature
