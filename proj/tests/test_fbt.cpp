#include <cmath>
#include <vector>

#include "doctest.h"

#include "bharm/errors.hpp"
#include "bharm/fbt.hpp"
#include "bharm/field.hpp"
#include "bharm/quadrature.hpp"
#include "bharm/specfun.hpp"

using namespace bharm;

namespace {

QuadSpec spec_with(int nodes, double radius) {
    QuadSpec s;
    s.nodes_per_axis = nodes;
    s.truncation_radius = radius;
    return s;
}

}  // namespace

TEST_CASE("transform normalizer constants") {
    // v = 1/2 per axis: C_v = prod (2^0 Gamma(1))^(-1) = 1.
    CHECK(transform_normalizer(WeightVector::parse("0.5")).value() ==
          doctest::Approx(1.0));
    CHECK(transform_normalizer(WeightVector::parse("0.5,0.5")).value() ==
          doctest::Approx(1.0));
    // v = 1: (2^(1/2) Gamma(3/2))^(-1).
    CHECK(transform_normalizer(WeightVector::parse("1")).value() ==
          doctest::Approx(1.0 / (std::sqrt(2.0) * gamma_fn(1.5)))
              .epsilon(1e-14));
    // The printed variant replaces Gamma(v_i + 1/2) by the plain factor
    // (v_i + 1/2); the two agree only where Gamma(x + 1) = x Gamma(x) trips.
    const WeightVector v = WeightVector::parse("0.8,1.3");
    const double ratio = transform_normalizer_classical(v).value() /
                         transform_normalizer(v).value();
    CHECK(ratio == doctest::Approx(gamma_fn(1.3) / 1.3 * gamma_fn(1.8) / 1.8)
                       .epsilon(1e-13));
}

TEST_CASE("unit-width gaussian is self-reciprocal for every weight") {
    // F_B[e^(-|y|^2/2)](x) = e^(-|x|^2/2): the C_v normalization makes the
    // per-axis Hankel integral close exactly.
    const QuadSpec spec = spec_with(48, 12.0);
    for (const char* vtxt : {"0.5", "1", "0.6", "0.5,0.8"}) {
        const WeightVector v = WeightVector::parse(vtxt);
        const int n = v.dim();
        const ScalarField f = ScalarField::gaussian(n, 1.0);
        for (double base : {0.4, 1.0, 2.2}) {
            std::vector<double> x(n);
            double r2 = 0.0;
            for (int i = 0; i < n; ++i) {
                x[i] = base + 0.3 * i;
                r2 += x[i] * x[i];
            }
            CHECK(fb_numeric(f, x, v, spec) ==
                  doctest::Approx(std::exp(-r2 / 2.0)).epsilon(1e-10));
        }
    }
}

TEST_CASE("transform at the origin limit is the weighted mass") {
    // As x -> 0 the kernel tends to 1, so F_B f -> C_v * weighted mass.
    const WeightVector v = WeightVector::parse("0.5");
    const ScalarField f = ScalarField::gaussian(1, 1.0);
    const QuadSpec spec = spec_with(48, 12.0);
    const std::vector<double> x{1e-8};
    const double mass =
        transform_normalizer(v).value() *
        integrate_orthant(f, v, spec).value;
    CHECK(fb_numeric(f, x, v, spec) == doctest::Approx(mass).epsilon(1e-10));
}

TEST_CASE("double application recovers a non-unit-width gaussian") {
    // F_B is its own inverse under these conventions. The budget must
    // resolve the outer kernel's oscillation across the full inner range
    // (phase up to radius^2), hence the generous node count.
    const WeightVector v = WeightVector::parse("0.75");
    const QuadSpec spec = spec_with(96, 12.0);
    const ScalarField f = ScalarField::gaussian(1, 0.8);
    const ScalarField once(
        1,
        [f, v, spec](std::span<const double> x) {
            return fb_numeric(f, x, v, spec);
        },
        DecayClass::RapidlyDecaying, 0);
    for (double x0 : {0.6, 1.4}) {
        const std::vector<double> x{x0};
        CHECK(fb_numeric(once, x, v, spec) ==
              doctest::Approx(f(x)).epsilon(1e-7));
    }
}

TEST_CASE("power-law rule: coefficient, exponent, validity window") {
    // n = 1, v = 1/2 (N = 2), alpha = 6/5:
    // coefficient 2^(N/2-alpha) Gamma((N-alpha)/2) / Gamma(alpha/2).
    const WeightVector v = WeightVector::parse("0.5");
    const PowerLaw rule = fb_powerlaw(Rational(6, 5), v);
    CHECK_FALSE(rule.degenerate());
    CHECK(rule.exponent == Rational(6, 5) - Rational(2));
    const double want = std::pow(2.0, 1.0 - 1.2) * gamma_fn(0.4) /
                        gamma_fn(0.6);
    CHECK(rule.coefficient.value() == doctest::Approx(want).epsilon(1e-14));

    CHECK_THROWS_AS(fb_powerlaw(Rational(0), v), DomainError);
    CHECK_THROWS_AS(fb_powerlaw(Rational(2), v), DomainError);
    CHECK_THROWS_AS(fb_powerlaw(Rational(-1), v), DomainError);

    // The printed coefficient differs by exactly 2^(N/2 - alpha).
    const double classical =
        fb_powerlaw_coefficient_classical(Rational(6, 5), v).value();
    CHECK(classical / rule.coefficient.value() ==
          doctest::Approx(std::pow(2.0, 1.0 - 1.2)).epsilon(1e-12));
}

TEST_CASE("regularized numeric transform matches the power-law rule") {
    // The slow-decay oscillatory tail needs the damping schedule; this is
    // the quantitative content of the closed-form rule.
    const WeightVector v = WeightVector::parse("0.5");
    QuadSpec spec = spec_with(4000, 1200.0);
    spec.regularization_schedule = {0.2, 0.1, 0.05, 0.025, 0.0125};
    const Rational alpha(6, 5);
    const PowerLaw rule = fb_powerlaw(alpha, v);
    const ScalarField f = ScalarField::power_radial(1, alpha.value());
    for (double x0 : {0.7, 1.5}) {
        const std::vector<double> x{x0};
        const double numeric = fb_numeric(f, x, v, spec);
        const double closed =
            rule.coefficient.value() * std::pow(x0, rule.exponent.value());
        CHECK(numeric == doctest::Approx(closed).epsilon(1e-3));
    }
}

TEST_CASE("polynomially growing inputs demand a damping schedule") {
    const WeightVector v = WeightVector::parse("0.5");
    const ScalarField slow = ScalarField::rational_decay(1, 1.0);
    const std::vector<double> x{1.0};
    CHECK_THROWS_AS(fb_numeric(slow, x, v, spec_with(32, 12.0)), ConfigError);
}

TEST_CASE("convolution theorem on a gaussian pair") {
    const WeightVector v = WeightVector::parse("0.5");
    const ScalarField f = ScalarField::gaussian(1, 0.8);
    const ScalarField g = ScalarField::gaussian(1, 1.25);
    const QuadSpec spec = spec_with(48, 12.0);
    for (double x0 : {0.3, 1.0, 2.4}) {
        const std::vector<double> x{x0};
        const auto [lhs, rhs] = fb_conv_check(f, g, x, v, spec);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-6));
    }
}
