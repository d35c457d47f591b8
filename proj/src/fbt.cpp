#include "bharm/fbt.hpp"

#include <cmath>
#include <vector>

#include "bharm/errors.hpp"
#include "bharm/shiftconv.hpp"
#include "bharm/specfun.hpp"

namespace bharm {

namespace {
const Rational kHalf(1, 2);
}

ExactConstant transform_normalizer(const WeightVector& v) {
    ExactConstant c;
    for (int i = 0; i < v.dim(); ++i) {
        c.mul_two_pow(-(v.exact(i) - kHalf));
        c.div_gamma(v.exact(i) + kHalf);
    }
    return c;
}

ExactConstant transform_normalizer_classical(const WeightVector& v) {
    ExactConstant c;
    for (int i = 0; i < v.dim(); ++i) {
        c.mul_two_pow(-(v.exact(i) - kHalf));
        // (v_i + 1/2) as a plain factor, not through Gamma.
        c.mul_rational(Rational(1) / (v.exact(i) + kHalf));
    }
    return c;
}

double fb_numeric(const ScalarField& f, std::span<const double> x,
                  const WeightVector& v, const QuadSpec& spec) {
    int n = v.dim();
    if (f.dim() != n || static_cast<int>(x.size()) != n)
        throw DomainError("fb_numeric dimension mismatch");
    for (double xi : x)
        if (!(xi > 0.0))
            throw DomainError("transform evaluation point must be positive");

    std::vector<double> vv(v.values());
    std::vector<double> xv(x.begin(), x.end());
    auto integrand = [&f, xv, vv](std::span<const double> y) {
        double kernel = 1.0;
        for (std::size_t i = 0; i < y.size(); ++i)
            kernel *= normalized_j(vv[i], xv[i] * y[i]);
        return f(y) * kernel;
    };
    bool grade = f.decay_class() == DecayClass::SingularAtOrigin;
    if (f.decay_class() == DecayClass::PolynomialGrowth &&
        spec.regularization_schedule.empty())
        throw ConfigError(
            "polynomially growing transform input requires a damping schedule");
    IntegralResult r = integrate_orthant(integrand, v, spec, grade);
    return transform_normalizer(v).value() * r.value;
}

PowerLaw fb_powerlaw(const Rational& alpha, const WeightVector& v) {
    Rational bign = Rational(v.dim()) + Rational(2) * v.abs_exact();
    if (!(alpha > Rational(0)) || !(alpha < bign))
        throw DomainError("power-law exponent outside validity window (0, " +
                          bign.str() + "): " + alpha.str());
    ExactConstant coeff;
    coeff.mul_two_pow(bign / Rational(2) - alpha);
    coeff.mul_gamma((bign - alpha) / Rational(2));
    coeff.div_gamma(alpha / Rational(2));
    return PowerLaw{coeff, alpha - bign};
}

ExactConstant fb_powerlaw_coefficient_classical(const Rational& alpha,
                                                const WeightVector& v) {
    Rational bign = Rational(v.dim()) + Rational(2) * v.abs_exact();
    ExactConstant coeff;
    coeff.mul_two_pow(bign - Rational(2) * alpha);
    coeff.mul_gamma((bign - alpha) / Rational(2));
    coeff.div_gamma(alpha / Rational(2));
    return coeff;
}

std::pair<double, double> fb_conv_check(const ScalarField& f,
                                        const ScalarField& g,
                                        std::span<const double> x,
                                        const WeightVector& v,
                                        const QuadSpec& spec) {
    ScalarField conv = bconvolve_field(f, g, v, spec);
    double lhs = fb_numeric(conv, x, v, spec);
    double rhs = fb_numeric(f, x, v, spec) * fb_numeric(g, x, v, spec);
    return {lhs, rhs};
}

}  // namespace bharm
