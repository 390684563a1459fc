#pragma once

#include <functional>

namespace pastlife::quadrature {

struct QuadratureConfig {
    double abs_tol = 1e-10;
    double rel_tol = 1e-9;
    int max_subdivisions = 2000;
    /// Fraction of the interval length clipped at each endpoint; the clipped
    /// slivers are accounted for by extending the integrand with its boundary
    /// value. Guards evaluation at exact endpoints (e.g. f log f at a zero
    /// of f). Must lie in [0, 0.01).
    double endpoint_clip = 1e-12;
};

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    int subdivisions_used = 0;
    bool converged = false;
};

/// Adaptive integration of g over (lo, hi), hi may be +infinity.
///
/// Each panel is estimated with a nested Gauss 7 / Kronrod 15 pair; the
/// panel with the largest rule-pair discrepancy is bisected until the summed
/// discrepancy drops below max(abs_tol, rel_tol*|value|) or the subdivision
/// budget is exhausted. Semi-infinite domains are mapped to (0,1) through
/// x = lo + u/(1-u). Non-convergence is reported through `converged`, never
/// silently; a non-finite integrand value raises std::domain_error with the
/// offending abscissa.
///
/// Deterministic: identical inputs give bit-identical results.
QuadratureResult integrate(const std::function<double(double)>& g, double lo,
                           double hi, const QuadratureConfig& cfg = {});

/// Central finite difference with one Richardson extrapolation step (step
/// sizes h and h/2, h = step_hint * max(1, |t|)).
double differentiate(const std::function<double(double)>& h, double t,
                     double step_hint);

} // namespace pastlife::quadrature
