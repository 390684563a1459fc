#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "pastlife/builtins.hpp"
#include "pastlife/errors.hpp"
#include "pastlife/measures.hpp"
#include "pastlife/mc.hpp"
#include "pastlife/quadrature.hpp"
#include "pastlife/transforms.hpp"

using namespace pastlife;
using namespace pastlife::measures;

namespace {

// Identity wrap: hides the concrete type, so every measure takes the
// quadrature path. Lets the tests pit closed forms against quadrature.
DistPtr quad_view(DistPtr d) { return linear_transform(std::move(d), 1.0, 0.0); }

// Conditional entropy / varentropy of Exp(lambda), derived from
// lambda^2 Var(X | X <= t); agrees with quadrature and, at lambda = 1, with
// the published closed form.
double exp_past_entropy_ref(double lambda, double t) {
    const double u = lambda * t;
    const double f = -std::expm1(-u);
    return 1.0 + std::log(f / lambda) - u * std::exp(-u) / f;
}

double exp_past_varentropy_ref(double lambda, double t) {
    const double u = lambda * t;
    const double r = std::exp(-u) / (-std::expm1(-u));
    return 1.0 - u * u * r - u * u * r * r;
}

// Literal transcription of the published exponential past-varentropy
// expression. Dimensionally suspect in its log-lambda terms; kept only to
// document the residual against the definition (see the acceptance suite).
double exp_past_varentropy_printed(double lambda, double t) {
    const double e = std::exp(-lambda * t);
    const double f = 1.0 - e;
    const double ll = std::log(lambda);
    return 1.0 - 2.0 * lambda * lambda * ll + 2.0 * ll +
           (e / f) * (-lambda * lambda * t * t +
                      2.0 * lambda * lambda * lambda * t * ll - 2.0 * lambda * t * ll -
                      lambda * lambda * t * t * e / f);
}

} // namespace

TEST_CASE("entropy of the zoo") {
    CHECK(entropy(*make_builtin("uniform", {1.0})).value == 0.0);
    CHECK(entropy(*make_builtin("uniform", {1.0})).method == Method::closed_form);
    CHECK(entropy(*make_builtin("exponential", {1.0})).value == doctest::Approx(1.0));
    for (double lam : {0.5, 2.0})
        CHECK(entropy(*make_builtin("exponential", {lam})).value ==
              doctest::Approx(1.0 - std::log(lam)).epsilon(1e-14));
    CHECK(entropy(*make_builtin("power", {2.0})).value ==
          doctest::Approx(0.5 - std::log(2.0)).epsilon(1e-14));

    // closed forms agree with the quadrature route
    for (const auto& d : {make_builtin("uniform", {2.0}), make_builtin("exponential", {0.5}),
                          make_builtin("power", {3.0}), make_builtin("weibull", {2.0}),
                          make_builtin("weibull", {0.5})}) {
        const auto closed = entropy(*d);
        const auto quad = entropy(*quad_view(d));
        REQUIRE(closed.method == Method::closed_form);
        REQUIRE(quad.method == Method::quadrature);
        CHECK(closed.numerical_error == 0.0);
        CHECK(quad.numerical_error > 0.0);
        INFO(d->name());
        CHECK(std::fabs(closed.value - quad.value) <= 1e-9);
    }
}

TEST_CASE("varentropy of the zoo") {
    for (double b : {1.0, 2.0, 5.0})
        CHECK(varentropy(*make_builtin("uniform", {b})).value == 0.0);
    for (double lam : {0.5, 1.0, 2.0}) {
        CHECK(varentropy(*make_builtin("exponential", {lam})).value == 1.0);
        CHECK(std::fabs(varentropy(*quad_view(make_builtin("exponential", {lam}))).value -
                        1.0) <= 1e-9);
    }
    CHECK(varentropy(*make_builtin("power", {2.0})).value == doctest::Approx(0.25));
    CHECK(std::fabs(varentropy(*quad_view(make_builtin("power", {2.0}))).value - 0.25) <=
          1e-9);
    // Weibull shape 2: closed form pi^2/24 against quadrature
    const double w2 = varentropy(*make_builtin("weibull", {2.0})).value;
    CHECK(w2 == doctest::Approx(std::acos(-1.0) * std::acos(-1.0) / 24.0).epsilon(1e-12));
    CHECK(std::fabs(varentropy(*quad_view(make_builtin("weibull", {2.0}))).value - w2) <=
          1e-9);
}

TEST_CASE("past entropy closed forms and routes") {
    const auto u = make_builtin("uniform", {2.0});
    for (double t : {0.3, 0.9, 1.7})
        CHECK(past_entropy(PastContext(*u, t)).value ==
              doctest::Approx(std::log(t)).epsilon(1e-14));

    const auto p2 = make_builtin("power", {2.0});
    for (double t : {0.2, 0.5, 0.8})
        CHECK(past_entropy(PastContext(*p2, t)).value ==
              doctest::Approx(0.5 + std::log(t / 2.0)).epsilon(1e-14));

    for (double lam : {0.5, 1.0, 2.0}) {
        const auto e = make_builtin("exponential", {lam});
        for (double t : {0.4, 1.0, 2.0}) {
            const double ref = exp_past_entropy_ref(lam, t);
            CHECK(past_entropy(PastContext(*e, t)).value ==
                  doctest::Approx(ref).epsilon(1e-13));
            CHECK(std::fabs(past_entropy(PastContext(*quad_view(e), t)).value - ref) <=
                  1e-9);
        }
    }

    // the two quadrature routes agree with each other and the closed form
    for (const auto& d : {make_builtin("exponential", {1.0}), make_builtin("power", {2.0}),
                          make_builtin("weibull", {2.0})}) {
        for (double level : {0.2, 0.5, 0.8}) {
            const double t = d->quantile(level);
            const PastContext ctx(*d, t);
            const double a = past_entropy(ctx, {}, PastRoute::conditional_density).value;
            const double b = past_entropy(ctx, {}, PastRoute::log_decomposition).value;
            const double c = past_entropy(ctx).value;
            INFO(d->name() << " t=" << t);
            CHECK(std::fabs(a - b) <= 1e-8);
            CHECK(std::fabs(a - c) <= 1e-8);
        }
    }
}

TEST_CASE("past varentropy closed forms and routes") {
    const auto u = make_builtin("uniform", {1.0});
    for (double t : {0.2, 0.6, 0.95})
        CHECK(past_varentropy(PastContext(*u, t)).value == 0.0);

    // the power-2 past varentropy collapses to the constant 1/4
    const auto p2 = make_builtin("power", {2.0});
    for (double t : {0.1, 0.5, 0.9}) {
        CHECK(past_varentropy(PastContext(*p2, t)).value == doctest::Approx(0.25));
        CHECK(std::fabs(past_varentropy(PastContext(*quad_view(p2), t)).value - 0.25) <=
              1e-8);
    }

    for (double lam : {0.5, 1.0, 2.0}) {
        const auto e = make_builtin("exponential", {lam});
        for (double t : {0.5, 1.0, 2.0}) {
            const double ref = exp_past_varentropy_ref(lam, t);
            CHECK(past_varentropy(PastContext(*e, t)).value ==
                  doctest::Approx(ref).epsilon(1e-12));
            CHECK(std::fabs(past_varentropy(PastContext(*quad_view(e), t)).value - ref) <=
                  1e-8);
        }
    }

    for (const auto& d : {make_builtin("exponential", {1.0}), make_builtin("weibull", {2.0})}) {
        for (double level : {0.2, 0.5, 0.8}) {
            const PastContext ctx(*d, d->quantile(level));
            const double a = past_varentropy(ctx, {}, PastRoute::conditional_density).value;
            const double b = past_varentropy(ctx, {}, PastRoute::log_decomposition).value;
            CHECK(std::fabs(a - b) <= 1e-8);
        }
    }
}

TEST_CASE("published exponential past-varentropy expression: documented typo") {
    // At lambda = 1 every log-lambda term vanishes and the printed form
    // agrees with the definition; away from lambda = 1 it does not.
    for (double t : {0.5, 1.0, 2.0})
        CHECK(std::fabs(exp_past_varentropy_printed(1.0, t) -
                        exp_past_varentropy_ref(1.0, t)) <= 1e-12);
    CHECK(std::fabs(exp_past_varentropy_printed(2.0, 1.0) -
                    exp_past_varentropy_ref(2.0, 1.0)) > 1e-2);
}

TEST_CASE("past varentropy is nonnegative") {
    const auto laws = {make_builtin("uniform", {1.5}), make_builtin("exponential", {0.7}),
                       make_builtin("power", {3.0}), make_builtin("weibull", {2.0}),
                       make_builtin("weibull", {0.5})};
    for (const auto& d : laws) {
        for (int i = 0; i < 24; ++i) {
            const double level = 0.02 + 0.96 * mc::uniform01(11, 3, i);
            const double t = d->quantile(level);
            INFO(d->name() << " t=" << t);
            CHECK(past_varentropy(PastContext(*d, t)).value >= -1e-9);
        }
    }
}

TEST_CASE("residual entropy and varentropy") {
    for (double lam : {0.5, 1.0, 2.0}) {
        const auto e = make_builtin("exponential", {lam});
        for (double t : {0.0, 0.5, 2.0}) {
            CHECK(residual_entropy(*e, t).value ==
                  doctest::Approx(1.0 - std::log(lam)).epsilon(1e-14));
            CHECK(residual_varentropy(*e, t).value == 1.0);
        }
        // memorylessness through the quadrature route as well
        CHECK(std::fabs(residual_entropy(*quad_view(e), 0.7).value -
                        (1.0 - std::log(lam))) <= 1e-9);
        CHECK(std::fabs(residual_varentropy(*quad_view(e), 0.7).value - 1.0) <= 1e-8);
    }

    const auto u = make_builtin("uniform", {2.0});
    for (double t : {0.0, 0.5, 1.5}) {
        CHECK(residual_entropy(*u, t).value ==
              doctest::Approx(std::log(2.0 - t)).epsilon(1e-14));
        CHECK(residual_varentropy(*u, t).value == 0.0);
    }

    // t at the lower endpoint: no conditioning at all
    const auto w = make_builtin("weibull", {2.0});
    CHECK(std::fabs(residual_entropy(*w, 0.0).value - entropy(*w).value) <= 1e-9);
    CHECK(std::fabs(residual_varentropy(*w, 0.0).value - varentropy(*w).value) <= 1e-8);

    CHECK_THROWS_AS(residual_entropy(*u, 2.0), std::domain_error);
    CHECK_THROWS_AS(residual_entropy(*u, 2.0 - 1e-12), std::domain_error);
}

TEST_CASE("reversed hazard rates") {
    const auto u = make_builtin("uniform", {2.0});
    for (double t : {0.4, 1.1})
        CHECK(reversed_hazard(*u, t) == doctest::Approx(1.0 / t).epsilon(1e-14));

    const auto p2 = make_builtin("power", {2.0});
    CHECK(reversed_hazard(*p2, 0.5) == doctest::Approx(4.0).epsilon(1e-14)); // 2/t

    const auto e = make_builtin("exponential", {1.0});
    CHECK(reversed_hazard(*e, 1.0) ==
          doctest::Approx(std::exp(-1.0) / (1.0 - std::exp(-1.0))).epsilon(1e-14));

    CHECK_THROWS_AS(reversed_hazard(*u, -0.5), std::domain_error);
}

TEST_CASE("cumulative reversed hazard") {
    const auto p2 = make_builtin("power", {2.0});
    CHECK(cumulative_reversed_hazard(*p2, 0.5) ==
          doctest::Approx(2.0 * std::log(2.0)).epsilon(1e-14));

    const auto u = make_builtin("uniform", {1.0});
    CHECK(cumulative_reversed_hazard(*u, std::exp(-1.0)) == doctest::Approx(1.0));
    CHECK(std::fabs(cumulative_reversed_hazard(*u, 1.0 - 1e-13)) <= 1e-12);

    // equals the integral of q over (t, sup D)
    for (const auto& d : {make_builtin("exponential", {1.0}), make_builtin("weibull", {2.0}),
                          make_builtin("power", {2.0})}) {
        for (double level : {0.25, 0.6, 0.9}) {
            const double t = d->quantile(level);
            quadrature::QuadratureConfig cfg;
            cfg.endpoint_clip = 0.0;
            const auto r = quadrature::integrate(
                [&](double x) {
                    const double f = d->cdf(x);
                    return f > 0.0 ? d->pdf(x) / f : 0.0;
                },
                t, d->support().upper, cfg);
            INFO(d->name());
            CHECK(std::fabs(std::exp(-r.value) - d->cdf(t)) <= 1e-7);
        }
    }
}

TEST_CASE("generalized reversed hazard") {
    const auto p2 = make_builtin("power", {2.0});
    for (double t : {0.2, 0.5, 0.9}) {
        CHECK(generalized_reversed_hazard(*p2, t, 0.0) ==
              doctest::Approx(reversed_hazard(*p2, t)).epsilon(1e-14));
        // f/F^(1/2) = 2t/t = 2, constant
        CHECK(generalized_reversed_hazard(*p2, t, 0.5) == doctest::Approx(2.0).epsilon(1e-14));
    }
    const auto u = make_builtin("uniform", {1.0});
    CHECK(generalized_reversed_hazard(*u, 0.7, 1.0) == doctest::Approx(1.0));
}

TEST_CASE("mean inactivity time") {
    const auto u = make_builtin("uniform", {2.0});
    for (double t : {0.5, 1.4})
        CHECK(mean_inactivity_time(PastContext(*u, t)).value ==
              doctest::Approx(t / 2.0).epsilon(1e-14));

    const auto p2 = make_builtin("power", {2.0});
    for (double t : {0.3, 0.9})
        CHECK(mean_inactivity_time(PastContext(*p2, t)).value ==
              doctest::Approx(t / 3.0).epsilon(1e-14));

    // exponential antiderivative oracle vs closed form vs quadrature
    for (double lam : {0.5, 1.0, 2.0}) {
        const auto e = make_builtin("exponential", {lam});
        for (double t : {0.5, 1.5}) {
            const double f = -std::expm1(-lam * t);
            const double oracle = t - (1.0 / lam) * (1.0 - std::exp(-lam * t) * (lam * t + 1.0)) / f;
            CHECK(mean_inactivity_time(PastContext(*e, t)).value ==
                  doctest::Approx(oracle).epsilon(1e-12));
            CHECK(std::fabs(mean_inactivity_time(PastContext(*quad_view(e), t)).value -
                            oracle) <= 1e-10);
        }
    }
}

TEST_CASE("variance inactivity time") {
    const auto u = make_builtin("uniform", {1.0});
    for (double t : {0.3, 0.8})
        CHECK(variance_inactivity_time(PastContext(*u, t)).value ==
              doctest::Approx(t * t / 12.0).epsilon(1e-14));

    // power-2: t^2/18, frozen from the Monte Carlo oracle and the
    // antiderivative E[(t-X)^2 | X<=t] = t^2/6
    const auto p2 = make_builtin("power", {2.0});
    for (double t : {0.4, 0.9}) {
        CHECK(variance_inactivity_time(PastContext(*p2, t)).value ==
              doctest::Approx(t * t / 18.0).epsilon(1e-13));
        CHECK(std::fabs(variance_inactivity_time(PastContext(*quad_view(p2), t)).value -
                        t * t / 18.0) <= 1e-9);
    }
    {
        mc::MCConfig mcc;
        mcc.n_samples = 400000;
        mcc.seed = 424242;
        const PastContext ctx(*p2, 0.6);
        const auto [mhat, vhat] = mc::mc_inactivity_moments(ctx, mcc);
        CHECK(std::fabs(vhat.mean - 0.02) <= 4.0 * vhat.std_error);
    }

    for (double lam : {0.5, 2.0}) {
        const auto e = make_builtin("exponential", {lam});
        const double t = 1.0;
        const double closed = variance_inactivity_time(PastContext(*e, t)).value;
        CHECK(std::fabs(variance_inactivity_time(PastContext(*quad_view(e), t)).value -
                        closed) <= 1e-9);
    }

    // degenerate conditioning: variance collapses quadratically
    CHECK(variance_inactivity_time(PastContext(*u, 1e-4)).value <= 1e-8);
}

TEST_CASE("past entropy derivative identity values") {
    const auto u = make_builtin("uniform", {2.0});
    for (double t : {0.4, 1.3})
        CHECK(past_entropy_derivative(PastContext(*u, t)) ==
              doctest::Approx(1.0 / t).epsilon(1e-13));

    const auto p2 = make_builtin("power", {2.0});
    for (double t : {0.3, 0.7})
        CHECK(past_entropy_derivative(PastContext(*p2, t)) ==
              doctest::Approx(1.0 / t).epsilon(1e-13));

    const auto e = make_builtin("exponential", {1.0});
    const auto h_of = [&](double s) { return past_entropy(PastContext(*e, s)).value; };
    const double fd = quadrature::differentiate(h_of, 1.0, 1e-4);
    CHECK(std::fabs(past_entropy_derivative(PastContext(*e, 1.0)) - fd) <= 1e-6);
}

TEST_CASE("past varentropy derivative identity values") {
    const auto u = make_builtin("uniform", {1.0});
    CHECK(std::fabs(past_varentropy_derivative(PastContext(*u, 0.5))) <= 1e-12);

    const auto p2 = make_builtin("power", {2.0});
    for (double t : {0.3, 0.7})
        CHECK(std::fabs(past_varentropy_derivative(PastContext(*p2, t))) <= 1e-12);

    const auto e = make_builtin("exponential", {1.0});
    const auto v_of = [&](double s) { return past_varentropy(PastContext(*e, s)).value; };
    const double fd = quadrature::differentiate(v_of, 1.0, 1e-4);
    CHECK(std::fabs(past_varentropy_derivative(PastContext(*e, 1.0)) - fd) <= 1e-5);
}

TEST_CASE("prhr past entropy via the gamma substitution") {
    // a = 1 reduces to the base past entropy
    const auto e = make_builtin("exponential", {1.0});
    const auto fam1 = prhr(e, 1.0);
    for (double t : {0.5, 1.5})
        CHECK(std::fabs(prhr_past_entropy(*fam1, t).value -
                        past_entropy(PastContext(*e, t)).value) <= 1e-10);

    // prhr(uniform, 2) carries the power-2 past entropy
    const auto fam2 = prhr(make_builtin("uniform", {1.0}), 2.0);
    for (double t : {0.3, 0.6, 0.9}) {
        const auto g = prhr_past_entropy(*fam2, t);
        CHECK(g.method == Method::gamma_substitution);
        CHECK(std::fabs(g.value - (0.5 + std::log(t / 2.0))) <= 1e-8);
    }

    // dual route equivalence on the exponential
    const auto fam3 = prhr(e, 3.0);
    CHECK(std::fabs(prhr_past_entropy(*fam3, 2.0).value -
                    past_entropy(PastContext(*fam3, 2.0)).value) <= 1e-7);
}

TEST_CASE("prhr past varentropy via the gamma substitution") {
    const auto u = make_builtin("uniform", {1.0});
    const auto fam1 = prhr(u, 1.0);
    for (double t : {0.4, 0.8})
        CHECK(std::fabs(prhr_past_varentropy(*fam1, t).value -
                        past_varentropy(PastContext(*u, t)).value) <= 1e-9);

    const auto fam2 = prhr(u, 2.0);
    for (double t : {0.3, 0.6, 0.9})
        CHECK(std::fabs(prhr_past_varentropy(*fam2, t).value - 0.25) <= 1e-8);

    const auto e = make_builtin("exponential", {1.0});
    const auto fam3 = prhr(e, 2.0);
    CHECK(std::fabs(prhr_past_varentropy(*fam3, 1.0).value -
                    past_varentropy(PastContext(*fam3, 1.0)).value) <= 1e-6);
}

TEST_CASE("prhr dual-route equivalence across the zoo") {
    quadrature::QuadratureConfig tightq;
    tightq.abs_tol = 1e-13;
    tightq.rel_tol = 1e-12;
    for (const auto& base :
         {make_builtin("uniform", {1.0}), make_builtin("exponential", {1.0}),
          make_builtin("power", {2.0}), make_builtin("weibull", {2.0})}) {
        for (double a : {0.5, 1.0, 2.0, 3.0}) {
            const auto fam = prhr(base, a);
            for (double level : {0.25, 0.5, 0.75}) {
                const double t = base->quantile(level);
                const PastContext ctx(*fam, t);
                INFO(fam->name() << " t=" << t);
                CHECK(std::fabs(prhr_past_entropy(*fam, t, tightq).value -
                                past_entropy(ctx, tightq).value) <= 1e-6);
                CHECK(std::fabs(prhr_past_varentropy(*fam, t, tightq).value -
                                past_varentropy(ctx, tightq).value) <= 1e-6);
            }
        }
    }
}

TEST_CASE("discrete entropy and varentropy") {
    const std::vector<double> degenerate = {1.0};
    CHECK(discrete_entropy(degenerate) == 0.0);
    CHECK(discrete_varentropy(degenerate) == 0.0);

    const std::vector<double> fair = {0.5, 0.5};
    CHECK(discrete_entropy(fair) == doctest::Approx(std::log(2.0)).epsilon(1e-15));
    CHECK(std::fabs(discrete_varentropy(fair)) <= 1e-15);

    // hand expansion: V = (3/16) log(3)^2
    const std::vector<double> biased = {0.25, 0.75};
    CHECK(discrete_varentropy(biased) ==
          doctest::Approx(0.1875 * std::log(3.0) * std::log(3.0)).epsilon(1e-13));

    // zero entries contribute exactly nothing
    const std::vector<double> with_zeros = {0.0, 1.0, 0.0};
    CHECK(discrete_entropy(with_zeros) == 0.0);

    // a long uniform vector: Kahan keeps the 1e-12 validation meaningful
    std::vector<double> big(1u << 20, 1.0 / (1u << 20));
    CHECK(discrete_entropy(big) == doctest::Approx(std::log(double(1u << 20))).epsilon(1e-12));
    CHECK(std::fabs(discrete_varentropy(big)) <= 1e-18);

    CHECK_THROWS_AS(discrete_entropy(std::vector<double>{0.5, 0.4}), std::invalid_argument);
    CHECK_THROWS_AS(discrete_entropy(std::vector<double>{1.2, -0.2}), std::invalid_argument);
}

TEST_CASE("past context validation") {
    const auto u = make_builtin("uniform", {1.0});
    CHECK_THROWS_AS(PastContext(*u, 0.0), std::domain_error);
    CHECK_THROWS_AS(PastContext(*u, 1.0), std::domain_error);
    CHECK_THROWS_AS(PastContext(*u, -0.3), std::domain_error);

    // conditioning probability below threshold
    const auto e = make_builtin("exponential", {1.0});
    CHECK_THROWS_AS(PastContext(*e, 1e-11), std::domain_error);
    CHECK_NOTHROW(PastContext(*e, 1e-9));
}

TEST_CASE("past measures converge to the full measures") {
    for (const auto& d : {make_builtin("exponential", {1.0}), make_builtin("weibull", {2.0})}) {
        const double t = d->quantile(1.0 - 1e-8);
        const PastContext ctx(*d, t);
        INFO(d->name());
        CHECK(std::fabs(past_entropy(ctx).value - entropy(*d).value) <= 1e-4);
        CHECK(std::fabs(past_varentropy(ctx).value - varentropy(*d).value) <= 1e-4);
    }
}

TEST_CASE("past measures equal the inactivity-time measures") {
    for (const auto& d : {make_builtin("uniform", {1.0}), make_builtin("exponential", {1.0}),
                          make_builtin("power", {2.0}), make_builtin("weibull", {2.0})}) {
        for (double level : {0.3, 0.7}) {
            const double t = d->quantile(level);
            const auto xt = inactivity_time(d, t);
            const PastContext ctx(*d, t);
            INFO(d->name() << " t=" << t);
            CHECK(std::fabs(entropy(*xt).value - past_entropy(ctx).value) <= 1e-8);
            CHECK(std::fabs(varentropy(*xt).value - past_varentropy(ctx).value) <= 1e-8);
        }
    }
}

TEST_CASE("hazard and mean inactivity identity") {
    for (const auto& d : {make_builtin("exponential", {1.0}), make_builtin("weibull", {2.0})}) {
        for (double level : {0.3, 0.6}) {
            const double t = d->quantile(level);
            const auto m_of = [&](double s) {
                return mean_inactivity_time(PastContext(*d, s)).value;
            };
            const double mprime = quadrature::differentiate(m_of, t, 1e-4);
            const double lhs = reversed_hazard(*d, t);
            INFO(d->name() << " t=" << t);
            CHECK(std::fabs(lhs - (1.0 - mprime) / m_of(t)) <= 1e-5);
        }
    }
}

TEST_CASE("registry dispatches and validates names") {
    const auto p2 = make_builtin("power", {2.0});
    CHECK(evaluate_by_name(*p2, "past-entropy", 0.5).value ==
          doctest::Approx(0.5 + std::log(0.25)));
    CHECK(evaluate_by_name(*p2, "generalized-reversed-hazard", 0.5, {}, 0.5).value ==
          doctest::Approx(2.0));
    CHECK(evaluate_by_name(*p2, "entropy", 0.0).method == Method::closed_form);
    CHECK_THROWS_AS(evaluate_by_name(*p2, "no-such-measure", 0.5), std::invalid_argument);
    CHECK_THROWS_AS(evaluate_by_name(*p2, "prhr-past-entropy", 0.5), std::invalid_argument);
    const auto fam = prhr(make_builtin("uniform", {1.0}), 2.0);
    CHECK(evaluate_by_name(*fam, "prhr-past-entropy", 0.5).method ==
          Method::gamma_substitution);
    CHECK(measure_names().size() == 15);
}
