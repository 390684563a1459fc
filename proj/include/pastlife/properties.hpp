#pragma once

#include <span>
#include <string>
#include <vector>

#include "pastlife/measures.hpp"

namespace pastlife::properties {

using measures::PastContext;
using measures::QuadratureConfig;

/// Tolerances for the identity and bound checks: identities travelled through closed
/// forms are held to tol_closed, anything through quadrature or finite
/// differences to tol_numeric.
struct CheckConfig {
    double tol_closed = 1e-7;
    double tol_numeric = 1e-5;
    /// Two sides of an identity count as "constant on the grid" when their
    /// spread stays below this.
    double constancy_tol = 1e-6;
    QuadratureConfig quad{};
};

struct CheckRow {
    double t = 0.0;
    double lhs = 0.0;
    double rhs = 0.0;
    double residual = 0.0;
    bool ok = true;
};

/// Outcome of one identity check over a t-grid. A falsified mathematical
/// claim is data, not an exception: `pass` goes false and the rows say where.
struct CheckReport {
    std::string name;
    bool applicable = true;
    std::string note;
    std::vector<CheckRow> rows;
    double max_residual = 0.0;
    bool pass = true;
};

/// Outcome of a one-sided bound over a t-grid; `margin` is lhs - rhs, and
/// `satisfied` allows the stated tolerance in the bound's direction.
struct BoundReport {
    std::string name;
    bool applicable = true;
    std::string note;
    std::vector<double> t_grid, lhs, rhs, margin;
    std::vector<bool> satisfied;
    bool pass = true;
    double max_violation = 0.0;
};

/// The weight function of the covariance-identity lower bound, tabulated on
/// an interior midpoint grid over (0, t) from its defining integral; the
/// derivative comes from finite differences on the grid.
struct OmegaFunction {
    double t = 0.0;
    double mean_inactivity = 0.0;
    double variance_inactivity = 0.0;
    std::vector<double> grid;
    std::vector<double> omega;
    std::vector<double> omega_prime;
    /// E[omega'(X_(t))], integrated against the inactivity density.
    double expected_omega_prime = 0.0;
};

/// |finite-difference V' - closed derivative identity| at ctx.t.
double check_varentropy_derivative(const PastContext& ctx, double step,
                                   const CheckConfig& cfg = {});

/// Constant past varentropy forces |H + log q| = sqrt(v) on the grid.
CheckReport check_constant_varentropy(const Distribution& d, std::span<const double> t_grid,
                                      const CheckConfig& cfg = {});

/// If H + log q == c on the grid, V(tX) = c^2 + (V(X) - c^2)/F(t) follows.
CheckReport check_constancy_implies_scaled_form(const Distribution& d, double c,
                                   std::span<const double> t_grid,
                                   const CheckConfig& cfg = {});

/// f/F^c constant equal to exp(c - H(X)) holds exactly when H + log q == c;
/// the two sides must hold or fail together.
CheckReport check_q1mc_constancy_equivalence(const Distribution& d, double c,
                                             std::span<const double> t_grid,
                                             const CheckConfig& cfg = {});

/// For Y = aX + b: V(tY) = V(sX) and H(tY) = H(sX) + log a with s = (t-b)/a.
/// The grid is in Y-time.
CheckReport check_linear_transform(const DistPtr& base, double a, double b,
                                   std::span<const double> t_grid,
                                   const CheckConfig& cfg = {});

/// For Y = phi(X), compares the direct past entropy/varentropy of Y against
/// the conditional-moment expansion on X (residual moments for decreasing
/// phi). The grid is in Y-time.
CheckReport check_monotonic_transform(const DistPtr& base, const MonotonicSpec& spec,
                                      std::span<const double> t_grid,
                                      const CheckConfig& cfg = {});

OmegaFunction omega_function(const PastContext& ctx, int grid_size = 1024,
                             const CheckConfig& cfg = {});

/// V(tX) >= variance_inactivity * E[omega']^2 (within tolerance).
BoundReport check_lower_bound(const Distribution& d, std::span<const double> t_grid,
                              const CheckConfig& cfg = {}, int grid_size = 4096);

/// Log-concave density forces V(tX) <= 1. Not applicable when the numeric
/// log-concavity gate fails.
BoundReport check_upper_bound_logconcave(const Distribution& d,
                                         std::span<const double> t_grid,
                                         const CheckConfig& cfg = {});

/// Numeric gate: second differences of log f on a 256-point interior grid.
bool is_log_concave(const Distribution& d, int grid_points = 256, double tol = 1e-8);

/// One rendered line of the verification suite.
struct SuiteLine {
    std::string name;
    bool applicable = true;
    bool pass = true;
    double max_residual = 0.0;
    std::string note;
};

/// Runs every applicable check against the law and returns one line per check.
std::vector<SuiteLine> run_standard_suite(const DistPtr& dist,
                                          const CheckConfig& cfg = {});

} // namespace pastlife::properties
