#include <cmath>
#include <vector>

#include "doctest.h"

#include "bharm/errors.hpp"
#include "bharm/field.hpp"
#include "bharm/quadrature.hpp"
#include "bharm/shiftconv.hpp"
#include "bharm/specfun.hpp"

using namespace bharm;

namespace {

QuadSpec spec_with(int nodes) {
    QuadSpec s;
    s.nodes_per_axis = nodes;
    return s;
}

ScalarField constant_one(int dim) {
    return ScalarField(
        dim, [](std::span<const double>) { return 1.0; },
        DecayClass::PolynomialGrowth, 64,
        [](std::span<const int> order, std::span<const double>) {
            for (int d : order)
                if (d > 0) return 0.0;
            return 1.0;
        });
}

}  // namespace

TEST_CASE("shift normalizer constants") {
    // n = 1, v = 1/2: Gamma(1) / (Gamma(1/2) Gamma(1/2)) = 1/pi.
    const WeightVector v = WeightVector::parse("0.5");
    CHECK(shift_normalizer(v).value() ==
          doctest::Approx(1.0 / M_PI).epsilon(1e-14));
    // The classically printed variant differs by Gamma(v+1)/Gamma(v+1/2).
    const double ratio = shift_normalizer_classical(v).value() /
                         shift_normalizer(v).value();
    CHECK(ratio == doctest::Approx(gamma_fn(1.5) / gamma_fn(1.0)));
}

TEST_CASE("shift of the constant function is 1") {
    for (const char* vtxt : {"0.5", "0.6,0.8", "0.5,1.0,0.75"}) {
        const WeightVector v = WeightVector::parse(vtxt);
        const int n = v.dim();
        const ScalarField one = constant_one(n);
        std::vector<double> x(n), y(n);
        for (int i = 0; i < n; ++i) {
            x[i] = 0.8 + 0.3 * i;
            y[i] = 1.4 - 0.2 * i;
        }
        CHECK(shift(one, x, y, v, spec_with(32)) ==
              doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("shift product formula on the joint eigenfunction") {
    // T_x^y applied to t -> prod j(v_i, lambda_i t_i) factorizes exactly:
    // the shifted value is prod j(v_i, lambda_i x_i) j(v_i, lambda_i y_i).
    const WeightVector v = WeightVector::parse("0.6,1.0");
    const std::vector<double> lambda{1.3, 0.7};
    const ScalarField wave =
        ScalarField::bessel_plane_wave(v.values(), lambda);
    const std::vector<double> x{0.9, 1.7};
    const std::vector<double> y{1.2, 0.4};
    const double got = shift(wave, x, y, v, spec_with(48));
    double want = 1.0;
    for (int i = 0; i < 2; ++i)
        want *= normalized_j(v[i], lambda[i] * x[i]) *
                normalized_j(v[i], lambda[i] * y[i]);
    CHECK(got == doctest::Approx(want).epsilon(1e-10));
}

TEST_CASE("shift tends to the identity as y -> 0") {
    const WeightVector v = WeightVector::parse("0.75");
    const ScalarField f = ScalarField::gaussian(1, 1.0);
    const std::vector<double> x{1.3};
    const double fx = f(x);
    double prev = 1e9;
    for (double eps : {1e-2, 1e-4, 1e-6}) {
        const std::vector<double> y{eps};
        const double err = std::fabs(shift(f, x, y, v, spec_with(32)) - fx);
        CHECK(err < prev);
        prev = err;
    }
    CHECK(prev <= 1e-10);
}

TEST_CASE("shift argument validation") {
    const WeightVector v = WeightVector::parse("0.5,0.5");
    const ScalarField f = ScalarField::gaussian(2, 1.0);
    const std::vector<double> good{1.0, 1.0};
    const std::vector<double> bad{1.0, 0.0};
    const std::vector<double> wrong_dim{1.0};
    CHECK_THROWS_AS(shift(f, bad, good, v, spec_with(16)), DomainError);
    CHECK_THROWS_AS(shift(f, good, wrong_dim, v, spec_with(16)), DomainError);
}

TEST_CASE("convolution commutes") {
    const WeightVector v = WeightVector::parse("0.5");
    const ScalarField f = ScalarField::gaussian(1, 1.0);
    const ScalarField g = ScalarField::polynomial_gaussian(1);
    const QuadSpec spec = spec_with(48);
    for (double x0 : {0.4, 1.1, 2.3}) {
        const std::vector<double> x{x0};
        CHECK(bconvolve(f, g, x, v, spec) ==
              doctest::Approx(bconvolve(g, f, x, v, spec)).epsilon(1e-8));
    }
}

TEST_CASE("convolution with the eigenfunction picks up the transform value") {
    // (f * wave_lambda)(x) = j(v, lambda x) * C_v-weighted transform of f
    // at lambda: the product formula under the integral. Cross-checks the
    // measure normalization used by bconvolve.
    const WeightVector v = WeightVector::parse("1.0");
    const std::vector<double> lambda{0.9};
    const ScalarField wave =
        ScalarField::bessel_plane_wave(v.values(), lambda);
    const ScalarField f = ScalarField::gaussian(1, 1.0);
    const QuadSpec spec = spec_with(64);
    const std::vector<double> x{1.6};

    const double got = bconvolve(f, wave, x, v, spec);
    // Self-reciprocal gaussian: F_B[e^(-t^2/2)](lambda) = e^(-lambda^2/2).
    const double want =
        normalized_j(1.0, 0.9 * 1.6) * std::exp(-0.9 * 0.9 / 2.0);
    CHECK(got == doctest::Approx(want).epsilon(1e-8));
}

TEST_CASE("bconvolve_field matches pointwise bconvolve") {
    const WeightVector v = WeightVector::parse("0.5");
    const ScalarField f = ScalarField::gaussian(1, 0.9);
    const ScalarField g = ScalarField::gaussian(1, 1.2);
    const QuadSpec spec = spec_with(32);
    const ScalarField h = bconvolve_field(f, g, v, spec);
    const std::vector<double> x{1.25};
    CHECK(h(x) == doctest::Approx(bconvolve(f, g, x, v, spec)));
}
