#include <cmath>
#include <vector>

#include "doctest.h"

#include "bharm/errors.hpp"
#include "bharm/fbt.hpp"
#include "bharm/kernels.hpp"
#include "bharm/quadrature.hpp"

using namespace bharm;

namespace {
const double kPi = 3.14159265358979323846;
}

TEST_CASE("signature split validation and parity classification") {
    CHECK_THROWS_AS(validate_split({0, 1}, 1), ConfigError);
    CHECK_THROWS_AS(validate_split({2, -1}, 1), ConfigError);
    CHECK_THROWS_AS(validate_split({2, 1}, 2), ConfigError);
    CHECK_NOTHROW(validate_split({2, 1}, 3));

    CHECK(parity_hypothesis({1, 0}, 1));
    CHECK(parity_hypothesis({1, 1}, 2));
    CHECK_FALSE(parity_hypothesis({2, 0}, 2));
    CHECK(parity_hypothesis({1, 2}, 3));
    CHECK(parity_hypothesis({3, 0}, 3));
    CHECK_FALSE(parity_hypothesis({2, 1}, 3));
}

TEST_CASE("cone and bracket forms") {
    const std::vector<double> x{2.0, 1.0, 0.5};
    const SignatureSplit s{2, 1};
    CHECK(cone_form(x, s) == doctest::Approx(4.75));
    CHECK(bracket_form(x, s) == doctest::Approx(25.0 - 0.0625));
    // q = 0 degenerates both to plain radial quantities.
    CHECK(cone_form(x, {3, 0}) == doctest::Approx(5.25));
    CHECK(bracket_form(x, {3, 0}) == doctest::Approx(5.25 * 5.25));
}

TEST_CASE("kernel homogeneity order") {
    CHECK(kernel_order(1, WeightVector::parse("0.5,0.5")) == Rational(-2));
    CHECK(kernel_order(2, WeightVector::parse("3/5,7/10")) ==
          Rational(4) - Rational(23, 5));
    CHECK_THROWS_AS(kernel_order(0, WeightVector::parse("0.5")), ConfigError);
}

TEST_CASE("radial prefactor: values and the degenerate line") {
    const WeightVector v = WeightVector::parse("0.5,0.5");  // N = 4, C_v = 1
    const ExactConstant c1 = s_coefficient(1, v);
    CHECK_FALSE(c1.degenerate());
    // 2^(N-4) Gamma((N-2)/2) = Gamma(1) = 1 = C_v here.
    CHECK(c1.value() == doctest::Approx(transform_normalizer(v).value()));

    // k = 2 hits Gamma(0).
    const ExactConstant c2 = s_coefficient(2, v);
    CHECK(c2.degenerate());
    CHECK(c2.pole_argument() == Rational(0));
    CHECK_THROWS_AS(c2.value(), DegenerateConstantError);

    // Generic weights keep clear of the poles.
    CHECK_FALSE(s_coefficient(2, WeightVector::parse("3/5,7/10")).degenerate());
    CHECK_THROWS_AS(s_coefficient(0, v), ConfigError);
}

TEST_CASE("cone normalizer closed forms") {
    // q = 0 forces the leading Gamma pair to coincide and cancel, and the
    // Gamma(2k) pair cancels too: K = pi^(5/2) Gamma(-1/2) = -2 pi^3.
    const WeightVector v3 = WeightVector::parse("0.5,0.5,0.5");
    const ExactConstant k30 = const_Kn(1, v3, {3, 0});
    CHECK_FALSE(k30.degenerate());
    CHECK(k30.value() ==
          doctest::Approx(-2.0 * std::pow(kPi, 3)).epsilon(1e-14));

    // Hyperbolic split at the same weights: the Gamma(0) pair cancels,
    // leaving pi^(3/2) Gamma(-1/2) = -2 pi^2.
    const WeightVector v2 = WeightVector::parse("0.5,0.5");
    const ExactConstant k11 = const_Kn(1, v2, {1, 1});
    CHECK_FALSE(k11.degenerate());
    CHECK(k11.value() == doctest::Approx(-2.0 * kPi * kPi).epsilon(1e-14));

    CHECK_FALSE(const_Kn(1, WeightVector::parse("3/5,7/10"), {1, 1})
                    .degenerate());
    CHECK_FALSE(const_Kn(2, WeightVector::parse("3/5,7/10"), {1, 1})
                    .degenerate());
    CHECK_THROWS_AS(const_Kn(0, v2, {1, 1}), ConfigError);
    CHECK_THROWS_AS(const_Kn(1, v2, {3, 1}), ConfigError);
}

TEST_CASE("composition constant is the shifted radial prefactor") {
    const WeightVector v = WeightVector::parse("3/5,7/10");
    CHECK(const_C(2, 1, v).value() ==
          doctest::Approx(s_coefficient(3, v).value()));
    CHECK_THROWS_AS(const_C(-1, 1, v), ConfigError);
}

TEST_CASE("pointwise kernels on the orthant") {
    const WeightVector v = WeightVector::parse("0.5,0.5,0.5");
    const std::vector<double> x{2.0, 1.0, 0.5};
    const double r2 = 5.25;

    // S_2 = s_coefficient * |x|^(2-N), here 4 |x|^(-4).
    CHECK(eval_S(1, x, v) ==
          doctest::Approx(4.0 * std::pow(r2, -2.0)).epsilon(1e-14));
    CHECK(eval_E(x, v) == doctest::Approx(-eval_S(1, x, v)));

    // q = 0 collapses R onto S up to the two normalizers.
    const double ratio = eval_S(1, x, v) / eval_R(1, x, v, {3, 0});
    CHECK(ratio ==
          doctest::Approx(4.0 * -2.0 * std::pow(kPi, 3)).epsilon(1e-12));

    // Degenerate prefactor surfaces at evaluation time (N = 4, k = 2).
    const WeightVector v2 = WeightVector::parse("0.5,0.5");
    CHECK_THROWS_AS(eval_S(2, std::vector<double>{2.0, 1.0}, v2),
                    DegenerateConstantError);

    // Argument screening.
    CHECK_THROWS_AS(eval_S(1, std::vector<double>{1.0}, v2), DomainError);
    CHECK_THROWS_AS(eval_S(1, std::vector<double>{1.0, 0.0}, v2), DomainError);
}

TEST_CASE("cone kernel demands interior points") {
    const WeightVector v = WeightVector::parse("0.5,0.5");
    const SignatureSplit s{1, 1};
    CHECK_NOTHROW(eval_R(1, std::vector<double>{2.0, 1.0}, v, s));
    CHECK_THROWS_AS(eval_R(1, std::vector<double>{1.0, 1.0}, v, s),
                    DomainError);
    CHECK_THROWS_AS(eval_R(1, std::vector<double>{0.5, 1.0}, v, s),
                    DomainError);
    // The unnormalized power obeys the same guard.
    CHECK_THROWS_AS(
        eval_R_unnormalized(1, std::vector<double>{1.0, 1.0}, v, s),
        DomainError);
}

TEST_CASE("analytic gradients match finite differences") {
    const WeightVector v = WeightVector::parse("3/5,7/10");
    const std::vector<double> x{1.3, 0.7};
    const double h = 1e-5;

    const std::vector<double> gs = grad_S(2, x, v);
    const std::vector<double> gr = grad_R_unnormalized(2, x, v, {1, 1});
    for (int i = 0; i < 2; ++i) {
        std::vector<double> hi(x), lo(x);
        hi[i] += h;
        lo[i] -= h;
        const double fd_s = (eval_S(2, hi, v) - eval_S(2, lo, v)) / (2 * h);
        CHECK(gs[i] == doctest::Approx(fd_s).epsilon(1e-8));
        const double fd_r = (eval_R_unnormalized(2, hi, v, {1, 1}) -
                             eval_R_unnormalized(2, lo, v, {1, 1})) /
                            (2 * h);
        CHECK(gr[i] == doctest::Approx(fd_r).epsilon(1e-8));
    }
}

TEST_CASE("radial image survives the prefactor pole") {
    const WeightVector v = WeightVector::parse("0.5,0.5");  // N = 4

    const RadialImage img1 = s_image(1, v);
    CHECK_FALSE(img1.coeff.degenerate());
    CHECK(img1.exponent == Rational(-2));
    // C_v 2^(N/2-2k) Gamma(k) = 2^0 Gamma(1) = 1.
    CHECK(img1.coeff.value() == doctest::Approx(1.0));

    // k = 2: prefactor is degenerate, but its Gamma(0) cancels inside the
    // transform, leaving C_v / 4.
    CHECK(s_coefficient(2, v).degenerate());
    const RadialImage img2 = s_image(2, v);
    CHECK_FALSE(img2.coeff.degenerate());
    CHECK(img2.exponent == Rational(-4));
    CHECK(img2.coeff.value() == doctest::Approx(0.25).epsilon(1e-14));

    const RadialImage claimed = s_image_claimed(2);
    CHECK(claimed.exponent == Rational(-4));
    CHECK(claimed.coeff.value() == doctest::Approx(-1.0));
    CHECK_THROWS_AS(s_image(0, v), ConfigError);
}

TEST_CASE("diamond images and their algebra") {
    const WeightVector v = WeightVector::parse("3/5,7/10");
    const ExactConstant cv = transform_normalizer(v);

    const BracketImage del = diamond_delta_image(2, v);
    const BracketImage ker = diamond_kernel_image(2, v);
    CHECK(del.power == 2);
    CHECK(ker.power == -2);
    CHECK(del.coeff.equals(cv));
    CHECK(ker.coeff.equals(cv));

    // Pointwise product of the two images is C_v^2: powers cancel.
    CHECK(del.power + ker.power == 0);
    CHECK((del.coeff * ker.coeff).equals(cv.pow(2)));

    // Applying the operator r more times multiplies by the bracket.
    CHECK(images_equal(multiply_by_bracket(diamond_kernel_image(3, v), 2),
                       diamond_kernel_image(1, v)));
    CHECK(images_equal(multiply_by_bracket(diamond_kernel_image(2, v), 2),
                       diamond_delta_image(0, v)));
    CHECK(images_equal(multiply_by_bracket(diamond_kernel_image(1, v), 3),
                       diamond_delta_image(2, v)));

    CHECK_THROWS_AS(diamond_delta_image(-1, v), ConfigError);
    CHECK_THROWS_AS(diamond_kernel_image(0, v), ConfigError);
    CHECK_THROWS_AS(multiply_by_bracket(del, -1), ConfigError);
}

TEST_CASE("pointwise diamond images") {
    const WeightVector v = WeightVector::parse("0.5,0.5");
    const SignatureSplit s{1, 1};
    const std::vector<double> x{2.0, 1.0};
    const double br = 15.0;  // (2^2)^2 - (1^2)^2
    const double cv = transform_normalizer(v).value();

    CHECK(fb_diamond_delta(0, x, v, s) == doctest::Approx(cv));
    CHECK(fb_diamond_delta(0, std::vector<double>{0.3, 5.0}, v, s) ==
          doctest::Approx(cv));
    CHECK(fb_diamond_delta(2, x, v, s) ==
          doctest::Approx(cv * br * br).epsilon(1e-14));
    CHECK(fb_diamond_kernel(1, x, v, s) ==
          doctest::Approx(cv / br).epsilon(1e-14));

    // Bracket zero set is excluded.
    CHECK_THROWS_AS(fb_diamond_kernel(1, std::vector<double>{1.0, 1.0}, v, s),
                    DomainError);
    CHECK_THROWS_AS(fb_diamond_delta(-1, x, v, s), ConfigError);
    CHECK_THROWS_AS(fb_diamond_kernel(0, x, v, s), ConfigError);
}

TEST_CASE("structural solution of the iterated equation") {
    const WeightVector v = WeightVector::parse("0.5,0.5");  // N = 4
    const SignatureSplit s{1, 1};

    SUBCASE("pure point mass") {
        const std::vector<double> rhs{3.0};
        const auto terms = solve_diamond_rhs(2, rhs, v, s);
        REQUIRE(terms.size() == 1);
        // 2*order = N: not tempered.
        CHECK(terms[0] ==
              SolutionTerm{TermKind::DiamondConv, 2, 1, 3.0, false});
    }

    SUBCASE("low-degree rhs keeps convolution terms, drops r = 0") {
        const std::vector<double> rhs{3.0, 5.0, 7.0};
        const auto terms = solve_diamond_rhs(3, rhs, v, s);
        REQUIRE(terms.size() == 2);
        CHECK(terms[0] ==
              SolutionTerm{TermKind::DiamondConv, 2, 1, 5.0, false});
        CHECK(terms[1] ==
              SolutionTerm{TermKind::DiamondConv, 1, -1, 7.0, true});
    }

    SUBCASE("high-degree rhs turns into point-mass iterates") {
        const std::vector<double> rhs{3.0, 5.0, 7.0};
        const auto terms = solve_diamond_rhs(1, rhs, v, s);
        REQUIRE(terms.size() == 2);
        CHECK(terms[0] ==
              SolutionTerm{TermKind::DiracIterate, 0, 1, 5.0, true});
        CHECK(terms[1] ==
              SolutionTerm{TermKind::DiracIterate, 1, 1, 7.0, true});
    }

    SUBCASE("trailing zero coefficients do not change the case") {
        const std::vector<double> rhs{3.0, 7.0, 0.0, 0.0};
        const auto terms = solve_diamond_rhs(3, rhs, v, s);
        REQUIRE(terms.size() == 1);
        CHECK(terms[0] ==
              SolutionTerm{TermKind::DiamondConv, 2, 1, 7.0, false});
    }

    SUBCASE("sign alternates with the convolution order") {
        const auto terms =
            solve_diamond_rhs(3, std::vector<double>{1.0}, v, s);
        REQUIRE(terms.size() == 1);
        CHECK(terms[0].sign == -1);
        CHECK_FALSE(terms[0].tempered);  // 2*3 >= N = 4: ordinary function
    }

    SUBCASE("argument screening") {
        CHECK_THROWS_AS(solve_diamond_rhs(0, std::vector<double>{1.0}, v, s),
                        ConfigError);
        CHECK_THROWS_AS(solve_diamond_rhs(1, std::vector<double>{}, v, s),
                        ConfigError);
        CHECK_THROWS_AS(
            solve_diamond_rhs(1, std::vector<double>{1.0}, v, {2, 1}),
            ConfigError);
    }
}
