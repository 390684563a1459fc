#pragma once

#include <span>
#include <string>

#include "pastlife/distribution.hpp"
#include "pastlife/quadrature.hpp"
#include "pastlife/transforms.hpp"

namespace pastlife::measures {

using quadrature::QuadratureConfig;

enum class Method { closed_form, quadrature, gamma_substitution };

std::string to_string(Method m);

/// A scalar measure together with its estimated numerical error and the
/// computation path that produced it. numerical_error is 0 exactly when the
/// value came from a closed form.
struct MeasureValue {
    double value = 0.0;
    double numerical_error = 0.0;
    Method method = Method::quadrature;
};

/// A lifetime law observed as failed at time t: the frame for every past /
/// inactivity measure. t must be interior to the support with F(t) above
/// the conditioning threshold.
struct PastContext {
    PastContext(const Distribution& d, double t_);
    const Distribution* dist;
    double t;
    double ft; // F(t), computed once
};

/// Which computational route a past measure takes. `automatic` prefers a
/// closed form and otherwise uses the decomposed single-integral route.
enum class PastRoute {
    automatic,
    closed_form_only,
    conditional_density, // integrate the conditional density f/F(t) directly
    log_decomposition,   // split log(f/F(t)) and integrate f log f once
};

// ---------------------------------------------------------------- entropy

MeasureValue entropy(const Distribution& d, const QuadratureConfig& cfg = {});
MeasureValue varentropy(const Distribution& d, const QuadratureConfig& cfg = {});

MeasureValue past_entropy(const PastContext& ctx, const QuadratureConfig& cfg = {},
                          PastRoute route = PastRoute::automatic);
MeasureValue past_varentropy(const PastContext& ctx, const QuadratureConfig& cfg = {},
                             PastRoute route = PastRoute::automatic);

MeasureValue residual_entropy(const Distribution& d, double t,
                              const QuadratureConfig& cfg = {});
MeasureValue residual_varentropy(const Distribution& d, double t,
                                 const QuadratureConfig& cfg = {});

// ---------------------------------------------------------------- hazards

/// q(t) = f(t)/F(t): failure rate just before t given failure by t.
double reversed_hazard(const Distribution& d, double t);

/// -log F(t), equal to the integral of q over (t, sup D).
double cumulative_reversed_hazard(const Distribution& d, double t);

/// f(t)/F(t)^(1-alpha); alpha = 0 recovers the reversed hazard rate.
double generalized_reversed_hazard(const Distribution& d, double t, double alpha);

// ------------------------------------------------------- inactivity time

MeasureValue mean_inactivity_time(const PastContext& ctx,
                                  const QuadratureConfig& cfg = {});
MeasureValue variance_inactivity_time(const PastContext& ctx,
                                      const QuadratureConfig& cfg = {});

// ------------------------------------------------------------ derivatives

/// d/dt of the past entropy: q(t) * (1 - H - log q(t)).
double past_entropy_derivative(const PastContext& ctx, const QuadratureConfig& cfg = {});

/// d/dt of the past varentropy: -q(t) * (V - (H + log q(t))^2).
double past_varentropy_derivative(const PastContext& ctx, const QuadratureConfig& cfg = {});

// ------------------------------------------------------------------- prhr

/// Past entropy of the PRHR member, computed through the substitution
/// y = F(x)^a. Must agree with past_entropy applied to fam directly.
MeasureValue prhr_past_entropy(const PRHRFamily& fam, double t,
                               const QuadratureConfig& cfg = {});
MeasureValue prhr_past_varentropy(const PRHRFamily& fam, double t,
                                  const QuadratureConfig& cfg = {});

// --------------------------------------------------------------- discrete

double discrete_entropy(std::span<const double> p);
double discrete_varentropy(std::span<const double> p);

// --------------------------------------------------------------- registry

/// Evaluates a measure by its CLI name ("past-entropy", "reversed-hazard",
/// ...). alpha feeds generalized-reversed-hazard only. Throws
/// std::invalid_argument for unknown names.
MeasureValue evaluate_by_name(const Distribution& d, const std::string& measure,
                              double t, const QuadratureConfig& cfg = {},
                              double alpha = 0.0);

/// All measure names evaluate_by_name accepts.
std::span<const std::string> measure_names();

} // namespace pastlife::measures
